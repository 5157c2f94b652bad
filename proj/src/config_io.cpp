#include "logpot/config_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "logpot/error.hpp"

namespace logpot {

std::string format_real(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg)
{
    throw InputError("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

std::vector<std::string> tokens(std::string_view s)
{
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

double number(const std::string& tok, std::size_t line)
{
    double v = 0.0;
    const char* first = tok.data();
    if (!tok.empty() && tok[0] == '+') ++first;
    auto [p, ec] = std::from_chars(first, tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || !std::isfinite(v))
        fail(line, "'" + tok + "' is not a finite number");
    return v;
}

struct Record {
    std::size_t line;
    cplx z;
    double w;
};

void check_duplicates(const std::vector<Record>& recs, CoincidentPolicy policy, std::vector<std::string>& notes)
{
    double diam = 0.0;
    for (std::size_t i = 0; i < recs.size(); ++i)
        for (std::size_t j = i + 1; j < recs.size(); ++j) diam = std::max(diam, std::abs(recs[i].z - recs[j].z));
    for (std::size_t i = 0; i < recs.size(); ++i)
        for (std::size_t j = i + 1; j < recs.size(); ++j)
            if (std::abs(recs[i].z - recs[j].z) <= 1e-9 * diam || diam == 0.0) {
                if (policy == CoincidentPolicy::Reject)
                    fail(recs[j].line, "point coincides with line " + std::to_string(recs[i].line) +
                                           " (use --merge-coincident to merge)");
                notes.push_back("lines " + std::to_string(recs[i].line) + " and " + std::to_string(recs[j].line) +
                                " coincide; merged");
            }
}

std::vector<double> parse_list(const std::string& v, std::size_t count, std::size_t line, const std::string& what)
{
    auto parts = split(v, ',');
    if (parts.size() != count) fail(line, what + " expects " + std::to_string(count) + " comma-separated numbers");
    std::vector<double> out;
    for (auto& p : parts) out.push_back(number(p, line));
    return out;
}

Region parse_region(const std::string& v, std::size_t line)
{
    const auto colon = v.find(':');
    const std::string kind = v.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : v.substr(colon + 1);
    try {
        if (kind == "disk") {
            auto p = parse_list(rest, 3, line, "region=disk");
            return Region::disk({p[0], p[1]}, p[2]);
        }
        if (kind == "annulus") {
            auto p = parse_list(rest, 4, line, "region=annulus");
            return Region::annulus({p[0], p[1]}, p[2], p[3]);
        }
    } catch (const InputError& e) {
        const std::string msg = e.what();
        if (msg.rfind("line ", 0) == 0) throw;
        fail(line, msg);
    }
    fail(line, "unknown region '" + kind + "' (expected disk or annulus)");
}

} // namespace

ParsedConfig parse_config(std::string_view text, CoincidentPolicy policy)
{
    ParsedConfig out;
    std::vector<Record> recs, xs, ys;
    std::size_t header_line = 0;
    bool have_header = false;

    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        auto tok = tokens(raw);
        if (tok.empty()) continue;

        if (!have_header) {
            have_header = true;
            header_line = lineno;
            if (tok[0] == "finite") {
                if (tok.size() != 1) fail(lineno, "'finite' takes no arguments");
                out.kind = ParsedConfig::Kind::Finite;
            } else if (tok[0] == "tuples") {
                if (tok.size() != 1) fail(lineno, "'tuples' takes no arguments");
                out.kind = ParsedConfig::Kind::Tuples;
            } else if (tok[0] == "family") {
                if (tok.size() < 2) fail(lineno, "'family' needs a name");
                out.kind = ParsedConfig::Kind::Family;
                out.family_name = tok[1];
                for (std::size_t i = 2; i < tok.size(); ++i) {
                    const auto eq = tok[i].find('=');
                    if (eq == std::string::npos || eq == 0) fail(lineno, "expected key=value, got '" + tok[i] + "'");
                    const auto key = tok[i].substr(0, eq);
                    if (out.family_keys.count(key)) fail(lineno, "duplicate key '" + key + "'");
                    out.family_keys[key] = tok[i].substr(eq + 1);
                }
            } else {
                fail(lineno, "expected 'finite', 'family' or 'tuples', got '" + tok[0] + "'");
            }
            continue;
        }

        if (out.kind == ParsedConfig::Kind::Tuples) {
            if (tok.size() != 4 || (tok[0] != "x" && tok[0] != "y"))
                fail(lineno, "expected 'x re im weight' or 'y re im weight'");
            Record r{lineno, {number(tok[1], lineno), number(tok[2], lineno)}, number(tok[3], lineno)};
            if (!(r.w > 0.0)) fail(lineno, "weight must be positive");
            (tok[0] == "x" ? xs : ys).push_back(r);
            continue;
        }
        if (out.kind == ParsedConfig::Kind::Family && out.family_name != "points")
            fail(lineno, "family '" + out.family_name + "' takes no point records");
        if (tok.size() != 3) fail(lineno, "expected 're im charge', got " + std::to_string(tok.size()) + " fields");
        Record r{lineno, {number(tok[0], lineno), number(tok[1], lineno)}, number(tok[2], lineno)};
        if (!(r.w > 0.0)) fail(lineno, "charge must be positive, got " + tok[2]);
        recs.push_back(r);
    }
    if (!have_header) throw InputError("line 1: empty configuration");

    auto weight_note = [&](const std::vector<Record>& rs, const char* what) {
        double s = 0.0;
        for (const auto& r : rs) s += r.w;
        if (std::abs(s - 1.0) > 1e-12)
            out.diagnostics.push_back(std::string(what) + " sum to " + format_real(s) + "; normalized for analysis");
    };

    if (out.kind == ParsedConfig::Kind::Tuples) {
        if (xs.empty() || ys.empty()) fail(header_line, "tuples need at least one x and one y record");
        auto build = [&](const std::vector<Record>& rs) {
            std::vector<cplx> p;
            std::vector<double> w;
            double s = 0.0;
            for (const auto& r : rs) s += r.w;
            for (const auto& r : rs) {
                p.push_back(r.z);
                w.push_back(r.w / s);
            }
            return WeightedTuple::planar(p, w, 1e-12);
        };
        weight_note(xs, "x weights");
        weight_note(ys, "y weights");
        out.x = build(xs);
        out.y = build(ys);
        return out;
    }

    if (out.kind == ParsedConfig::Kind::Finite) {
        if (recs.empty()) fail(header_line, "no point records");
        check_duplicates(recs, policy, out.diagnostics);
        weight_note(recs, "charges");
        std::vector<cplx> z;
        std::vector<double> a;
        for (const auto& r : recs) {
            z.push_back(r.z);
            a.push_back(r.w);
        }
        out.finite = ChargeConfiguration::create(std::move(z), std::move(a), policy);
        return out;
    }

    // family
    auto& keys = out.family_keys;
    auto take = [&](const std::string& key, double fallback) {
        auto it = keys.find(key);
        return it == keys.end() ? fallback : number(it->second, header_line);
    };
    static const std::map<std::string, std::vector<std::string>> allowed{
        {"geometric-real", {"rho", "base"}},
        {"geometric-spiral", {"rho", "base", "twist"}},
        {"harmonic-unbounded", {"spin"}},
        {"complex-charge", {"rho", "base", "spin"}},
        {"points", {}},
    };
    const auto fam = allowed.find(out.family_name);
    if (fam == allowed.end()) fail(header_line, "unknown family '" + out.family_name + "'");
    for (const auto& [k, v] : keys) {
        if (k == "n" || k == "region") continue;
        if (std::find(fam->second.begin(), fam->second.end(), k) == fam->second.end())
            fail(header_line, "family '" + out.family_name + "' has no parameter '" + k + "'");
    }
    if (auto it = keys.find("n"); it != keys.end() && it->second != "auto") {
        const double v = number(it->second, header_line);
        if (!(v >= 1.0) || v != std::floor(v)) fail(header_line, "n must be a positive integer or 'auto'");
        out.family_n = static_cast<std::size_t>(v);
    }
    if (auto it = keys.find("region"); it != keys.end()) out.region = parse_region(it->second, header_line);

    try {
        const auto& name = out.family_name;
        if (name == "geometric-real")
            out.family = SequenceFamily::geometric_real(take("rho", 1.0), take("base", 0.5));
        else if (name == "geometric-spiral")
            out.family = SequenceFamily::geometric_spiral(take("rho", 1.0), take("base", 0.5), take("twist", 1.0));
        else if (name == "harmonic-unbounded")
            out.family = SequenceFamily::harmonic_unbounded(take("spin", 2.399963229728653));
        else if (name == "complex-charge")
            out.family = SequenceFamily::complex_charge(take("rho", 1.0), take("base", 0.5), take("spin", 1.0));
        else {
            if (recs.empty()) fail(header_line, "family 'points' needs point records");
            check_duplicates(recs, CoincidentPolicy::Reject, out.diagnostics);
            std::vector<cplx> z;
            std::vector<double> a;
            for (const auto& r : recs) {
                z.push_back(r.z);
                a.push_back(r.w);
            }
            out.family = SequenceFamily::user_list(std::move(z), std::move(a));
        }
    } catch (const InputError& e) {
        const std::string msg = e.what();
        if (msg.rfind("line ", 0) == 0) throw;
        fail(header_line, msg);
    }
    return out;
}

std::string emit_finite(const ChargeConfiguration& config)
{
    std::ostringstream os;
    os << "finite\n";
    for (std::size_t i = 0; i < config.size(); ++i)
        os << format_real(config.points()[i].real()) << ' ' << format_real(config.points()[i].imag()) << ' '
           << format_real(config.charges()[i]) << '\n';
    return os.str();
}

std::string emit_config(const ParsedConfig& config)
{
    std::ostringstream os;
    switch (config.kind) {
    case ParsedConfig::Kind::Finite:
        return emit_finite(*config.finite);
    case ParsedConfig::Kind::Tuples:
        os << "tuples\n";
        for (std::size_t i = 0; i < config.x->size(); ++i)
            os << "x " << format_real(config.x->vec(i)[0]) << ' ' << format_real(config.x->vec(i)[1]) << ' '
               << format_real(config.x->weights()[i]) << '\n';
        for (std::size_t i = 0; i < config.y->size(); ++i)
            os << "y " << format_real(config.y->vec(i)[0]) << ' ' << format_real(config.y->vec(i)[1]) << ' '
               << format_real(config.y->weights()[i]) << '\n';
        return os.str();
    case ParsedConfig::Kind::Family:
        os << "family " << config.family_name;
        for (const auto& [k, v] : config.family_keys) os << ' ' << k << '=' << v;
        os << '\n';
        if (config.family_name == "points") {
            const auto& f = *config.family;
            for (std::size_t i = 1; i <= f.max_terms; ++i) {
                const auto t = f.term(i);
                os << format_real(t.z.real()) << ' ' << format_real(t.z.imag()) << ' ' << format_real(t.a.real())
                   << '\n';
            }
        }
        return os.str();
    }
    return os.str();
}

} // namespace logpot
