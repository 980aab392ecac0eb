#include "gsqg/config/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "gsqg/error.hpp"
#include "gsqg/spectral/fft.hpp"
#include "gsqg/spectral/random_field.hpp"
#include "gsqg/spectral/snapshot.hpp"

namespace gsqg::config {

namespace {

using multipliers::format_real;
using multipliers::parse_symbol;
using multipliers::Symbol;

struct Token {
    std::string text;
    int line = 0;
    int column = 0;  ///< column of the first value character
};

std::string_view trim(std::string_view s, int& offset) {
    offset = 0;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
        ++offset;
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_real(const Token& t) {
    double v = 0.0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
        throw ParseError("expected a finite real number, got '" + t.text + "'", t.line, t.column);
    }
    return v;
}

long long parse_integer(const Token& t) {
    long long v = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) throw ParseError("expected an integer, got '" + t.text + "'", t.line, t.column);
    return v;
}

std::uint64_t parse_unsigned(const Token& t) {
    std::uint64_t v = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
        throw ParseError("expected an unsigned integer, got '" + t.text + "'", t.line, t.column);
    }
    return v;
}

Symbol parse_expr(const Token& t) { return parse_symbol(t.text, t.line, t.column - 1); }

void require(bool ok, const Token& t, const std::string& msg) {
    if (!ok) throw ParseError(msg, t.line, t.column);
}

void assign(Config& c, const std::string& section, const std::string& key, const Token& v, const Token& key_tok) {
    if (section == "grid") {
        if (key == "n") {
            const long long n = parse_integer(v);
            require(n >= 4 && n % 2 == 0 && n <= 1 << 14, v, "grid n must be even and in [4, 16384]");
            c.grid.n = static_cast<int>(n);
        } else if (key == "box") {
            c.grid.box = parse_real(v);
            require(c.grid.box > 0.0, v, "box must be positive");
        } else if (key == "dealias") {
            c.grid.dealias = parse_real(v);
            require(c.grid.dealias > 0.0 && c.grid.dealias <= 1.0, v, "dealias must lie in (0, 1]");
        } else {
            throw ParseError("unknown key '" + key + "' in [grid]", key_tok.line, key_tok.column);
        }
    } else if (section == "suite") {
        if (key == "beta") {
            c.suite.beta = parse_real(v);
            require(c.suite.beta >= 0.0 && c.suite.beta <= 2.0, v, "beta must lie in [0, 2]");
        } else if (key == "gamma") {
            c.suite.gamma = parse_real(v);
            require(c.suite.gamma > 0.0 && c.suite.gamma < 1.0, v, "gamma must lie in (0, 1)");
        } else if (key == "m") {
            c.suite.m = parse_expr(v);
        } else if (key == "p_a") {
            c.suite.p_a = parse_expr(v);
        } else if (key == "p_b") {
            c.suite.p_b = parse_expr(v);
        } else if (key == "omega_a") {
            c.suite.omega_a = parse_expr(v);
        } else if (key == "omega_b") {
            c.suite.omega_b = parse_expr(v);
        } else if (key == "nu") {
            c.suite.nu = parse_expr(v);
        } else {
            throw ParseError("unknown key '" + key + "' in [suite]", key_tok.line, key_tok.column);
        }
    } else if (section == "run") {
        if (key == "dt") {
            if (v.text == "auto") {
                c.dt.reset();
            } else {
                c.dt = parse_real(v);
                require(*c.dt > 0.0, v, "dt must be positive or 'auto'");
            }
        } else if (key == "t_final") {
            c.t_final = parse_real(v);
            require(c.t_final >= 0.0, v, "t_final must be >= 0");
        } else if (key == "scheme") {
            try {
                c.scheme = solver::parse_scheme(v.text);
            } catch (const Error&) {
                throw ParseError("scheme must be ifrk4 or ifeuler", v.line, v.column);
            }
        } else if (key == "eps_visc") {
            c.eps_visc = parse_real(v);
            require(c.eps_visc >= 0.0, v, "eps_visc must be >= 0");
        } else if (key == "lambda_track") {
            c.lambda_track = parse_real(v);
            require(c.lambda_track >= 0.0, v, "lambda_track must be >= 0");
        } else if (key == "seed") {
            c.seed = parse_unsigned(v);
        } else if (key == "cadence") {
            const long long n = parse_integer(v);
            require(n >= 1 && n <= 1000000000, v, "cadence must be a positive integer");
            c.cadence = static_cast<int>(n);
        } else {
            throw ParseError("unknown key '" + key + "' in [run]", key_tok.line, key_tok.column);
        }
    } else if (section == "init") {
        if (key == "kind") {
            if (v.text == "random") {
                c.init.kind = InitKind::Random;
            } else if (v.text == "file") {
                c.init.kind = InitKind::File;
            } else if (v.text == "named") {
                c.init.kind = InitKind::Named;
            } else {
                throw ParseError("init kind must be random, file or named", v.line, v.column);
            }
        } else if (key == "name") {
            c.init.name = v.text;
        } else if (key == "path") {
            c.init.path = v.text;
        } else if (key == "amplitude") {
            c.init.amplitude = parse_real(v);
            require(c.init.amplitude >= 0.0, v, "amplitude must be >= 0");
        } else if (key == "decay") {
            c.init.decay = parse_real(v);
        } else {
            throw ParseError("unknown key '" + key + "' in [init]", key_tok.line, key_tok.column);
        }
    } else if (section == "output") {
        if (key == "dir") {
            c.out_dir = v.text;
        } else {
            throw ParseError("unknown key '" + key + "' in [output]", key_tok.line, key_tok.column);
        }
    }
}

const char* init_kind_text(InitKind k) {
    switch (k) {
        case InitKind::Random: return "random";
        case InitKind::File: return "file";
        case InitKind::Named: return "named";
    }
    return "random";
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Config parse_config(std::string_view text) {
    static const std::set<std::string> sections = {"grid", "suite", "run", "init", "output"};
    Config c;
    std::string section;
    std::set<std::string> seen;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw_line;
    while (std::getline(in, raw_line)) {
        ++line_no;
        std::string_view raw = raw_line;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        int lead = 0;
        const std::string_view line = trim(raw, lead);
        if (line.empty() || line.front() == '#' || line.front() == ';') continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError("unterminated section header", line_no, lead + 1);
            int inner_lead = 0;
            const std::string name(trim(line.substr(1, line.size() - 2), inner_lead));
            if (!sections.count(name)) throw ParseError("unknown section [" + name + "]", line_no, lead + 2 + inner_lead);
            section = name;
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected key = value", line_no, lead + 1);
        if (section.empty()) throw ParseError("key outside of any section", line_no, lead + 1);
        int klead = 0;
        const std::string key(trim(line.substr(0, eq), klead));
        if (key.empty()) throw ParseError("empty key", line_no, lead + 1);
        int vlead = 0;
        const std::string_view value = trim(line.substr(eq + 1), vlead);
        const Token key_tok{key, line_no, lead + 1};
        const Token val_tok{std::string(value), line_no, lead + static_cast<int>(eq) + 2 + vlead};
        if (value.empty()) throw ParseError("empty value for '" + key + "'", line_no, val_tok.column);
        if (!seen.insert(section + "." + key).second) {
            throw ParseError("duplicate key '" + key + "' in [" + section + "]", line_no, lead + 1);
        }
        assign(c, section, key, val_tok, key_tok);
    }
    return c;
}

Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::IoError, "cannot read config " + path.string());
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_config(text);
}

std::string Config::serialize() const {
    std::ostringstream out;
    out << "[grid]\n";
    out << "n = " << grid.n << '\n';
    out << "box = " << format_real(grid.box) << '\n';
    out << "dealias = " << format_real(grid.dealias) << '\n';
    out << "\n[suite]\n";
    out << "beta = " << format_real(suite.beta) << '\n';
    out << "gamma = " << format_real(suite.gamma) << '\n';
    out << "m = " << suite.m.to_string() << '\n';
    out << "p_a = " << suite.p_a.to_string() << '\n';
    out << "p_b = " << suite.p_b.to_string() << '\n';
    out << "omega_a = " << suite.omega_a.to_string() << '\n';
    out << "omega_b = " << suite.omega_b.to_string() << '\n';
    out << "nu = " << suite.nu.to_string() << '\n';
    out << "\n[run]\n";
    out << "dt = " << (dt ? format_real(*dt) : std::string("auto")) << '\n';
    out << "t_final = " << format_real(t_final) << '\n';
    out << "scheme = " << solver::to_string(scheme) << '\n';
    out << "eps_visc = " << format_real(eps_visc) << '\n';
    out << "lambda_track = " << format_real(lambda_track) << '\n';
    out << "seed = " << seed << '\n';
    out << "cadence = " << cadence << '\n';
    out << "\n[init]\n";
    out << "kind = " << init_kind_text(init.kind) << '\n';
    out << "name = " << init.name << '\n';
    if (!init.path.empty()) out << "path = " << init.path.string() << '\n';
    out << "amplitude = " << format_real(init.amplitude) << '\n';
    out << "decay = " << format_real(init.decay) << '\n';
    out << "\n[output]\n";
    out << "dir = " << out_dir.string() << '\n';
    return out.str();
}

std::string Config::digest() const { return fnv1a_hex(serialize()); }

spectral::SpectralField initial_field(const Config& config) {
    switch (config.init.kind) {
        case InitKind::Random: {
            spectral::RandomFieldSpec spec;
            spec.seed = config.seed;
            spec.amplitude = config.init.amplitude;
            spec.spectral_decay = config.init.decay;
            return spectral::random_field(config.grid, spec);
        }
        case InitKind::Named: return spectral::named_field(config.grid, config.init.name) * config.init.amplitude;
        case InitKind::File: {
            const spectral::PhysicalField p = spectral::read_snapshot(config.init.path);
            if (p.grid.n != config.grid.n || p.grid.box != config.grid.box) {
                throw Error(Errc::ShapeMismatch, "snapshot grid does not match [grid]");
            }
            spectral::PhysicalField samples = p;
            samples.grid = config.grid;
            spectral::SpectralField f = spectral::transform_forward(samples);
            f[0] = 0.0;
            return f;
        }
    }
    throw Error(Errc::InvalidArgument, "unknown init kind");
}

solver::RunConfig run_config(const Config& config) {
    solver::RunConfig rc;
    rc.grid = config.grid;
    rc.suite = config.suite;
    rc.dt = config.dt;
    rc.t_final = config.t_final;
    rc.scheme = config.scheme;
    rc.eps_visc = config.eps_visc;
    rc.lambda_track = config.lambda_track;
    rc.cadence = config.cadence;
    return rc;
}

}  // namespace gsqg::config
