#include "gsqg/harness/report.hpp"

#include <cmath>
#include <sstream>

#include "gsqg/io/atomic_file.hpp"
#include "gsqg/multipliers/symbol.hpp"

namespace gsqg::harness {

namespace {

const char* relation_text(Relation r) {
    switch (r) {
        case Relation::LessEqual: return "<=";
        case Relation::GreaterEqual: return ">=";
        case Relation::Equal: return "==";
    }
    return "?";
}

}  // namespace

bool ExperimentReport::passed() const {
    for (const auto& a : assertions) {
        if (!a.pass) return false;
    }
    return true;
}

bool ExperimentReport::check(const std::string& name, double measured, double threshold, Relation relation) {
    bool pass = std::isfinite(measured);
    if (pass) {
        switch (relation) {
            case Relation::LessEqual: pass = measured <= threshold; break;
            case Relation::GreaterEqual: pass = measured >= threshold; break;
            case Relation::Equal: pass = measured == threshold; break;
        }
    }
    assertions.push_back({name, measured, threshold, relation, pass});
    return pass;
}

bool ExperimentReport::check_flag(const std::string& name, bool pass) {
    assertions.push_back({name, pass ? 1.0 : 0.0, 1.0, Relation::Equal, pass});
    return pass;
}

void ExperimentReport::record(const std::string& key, double value) {
    values.emplace_back(key, multipliers::format_real(value));
}

void ExperimentReport::record(const std::string& key, const std::string& value) { values.emplace_back(key, value); }

std::string ExperimentReport::to_text() const {
    std::ostringstream out;
    out << "id=" << id << '\n';
    out << "config_digest=" << config_digest << '\n';
    out << "pass=" << (passed() ? "true" : "false") << '\n';
    for (const auto& a : assertions) {
        out << "assertion." << a.name << ".measured=" << multipliers::format_real(a.measured) << '\n';
        out << "assertion." << a.name << ".threshold=" << multipliers::format_real(a.threshold) << '\n';
        out << "assertion." << a.name << ".relation=" << relation_text(a.relation) << '\n';
        out << "assertion." << a.name << ".pass=" << (a.pass ? "true" : "false") << '\n';
    }
    for (const auto& [k, v] : values) out << "value." << k << '=' << v << '\n';
    for (std::size_t i = 0; i < artifacts.size(); ++i) out << "artifact." << i << '=' << artifacts[i].string() << '\n';
    return out.str();
}

std::filesystem::path write_report(const std::filesystem::path& dir, const ExperimentReport& report) {
    std::filesystem::create_directories(dir);
    const auto path = dir / (report.id + ".report");
    io::write_file_atomic(path, report.to_text());
    return path;
}

}  // namespace gsqg::harness
