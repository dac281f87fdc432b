#include "wv/wvxfmt.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <vector>

#include "wv/numfmt.hpp"

namespace wv {

namespace {

struct Token {
    std::string_view text;
    int col;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '#') ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

double parse_real(const Token& tok, int line_no, const char* what) {
    double value = 0.0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last || !std::isfinite(value))
        throw SyntaxError(line_no, tok.col,
                          std::string("expected ") + what + ", got '" + std::string(tok.text) + "'");
    return value;
}

int parse_index(const Token& tok, int line_no, const char* what) {
    int value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last || value < 0)
        throw SyntaxError(line_no, tok.col,
                          std::string("expected ") + what + ", got '" + std::string(tok.text) + "'");
    return value;
}

void need_args(const std::vector<Token>& toks, size_t n, int line_no) {
    if (toks.size() < n)
        throw SyntaxError(line_no, toks.back().col + static_cast<int>(toks.back().text.size()),
                          "missing field");
    if (toks.size() > n)
        throw SyntaxError(line_no, toks[n].col, "unexpected trailing field");
}

StateVector state_from_map(const std::map<int, cdouble>& amps, int dim, int eof_line,
                           const char* which) {
    std::vector<cdouble> dense(static_cast<size_t>(dim), 0.0);
    for (const auto& [idx, a] : amps) dense[static_cast<size_t>(idx)] = a;
    try {
        return StateVector(std::move(dense));
    } catch (const ZeroVector&) {
        throw ZeroState(eof_line, 1, std::string(which) + " state has no nonzero amplitude");
    }
}

// Store the normalized values back into the sparse map, dropping zeros.
void renormalize_map(std::map<int, cdouble>& amps, const StateVector& state) {
    std::map<int, cdouble> out;
    for (int i = 0; i < state.dim(); ++i)
        if (state.amplitude(i) != cdouble{0.0, 0.0}) out.emplace(i, state.amplitude(i));
    amps = std::move(out);
}

}  // namespace

StateVector ExperimentSpec::pre_state() const {
    return state_from_map(pre_amplitudes, dim, 1, "pre");
}

StateVector ExperimentSpec::post_state() const {
    return state_from_map(post_amplitudes, dim, 1, "post");
}

ExperimentSpec parse_experiment(const std::string& text) {
    ExperimentSpec spec;
    bool have_dim = false;
    bool have_name = false;
    std::set<std::pair<int, PathComponent::Kind>> seen_components;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const std::vector<Token> toks = tokenize(raw);
        if (toks.empty()) continue;
        const std::string_view directive = toks[0].text;

        if (directive == "dim") {
            if (have_dim) throw DuplicateDirective(line_no, toks[0].col, "dim declared twice");
            need_args(toks, 2, line_no);
            spec.dim = parse_index(toks[1], line_no, "positive integer");
            if (spec.dim < 1) throw SyntaxError(line_no, toks[1].col, "dim must be >= 1");
            have_dim = true;
            continue;
        }
        if (directive == "name") {
            if (have_name) throw DuplicateDirective(line_no, toks[0].col, "name declared twice");
            size_t start = raw.find("name") + 4;
            while (start < raw.size() && (raw[start] == ' ' || raw[start] == '\t')) ++start;
            size_t end = raw.find('#');
            if (end == std::string::npos) end = raw.size();
            while (end > start && (raw[end - 1] == ' ' || raw[end - 1] == '\t')) --end;
            spec.name = raw.substr(start, end - start);
            have_name = true;
            continue;
        }

        if (!have_dim)
            throw SyntaxError(line_no, toks[0].col,
                              "missing dim: it must be declared before '" +
                                  std::string(directive) + "'");

        if (directive == "pre" || directive == "post") {
            need_args(toks, 4, line_no);
            const int idx = parse_index(toks[1], line_no, "basis index");
            if (idx >= spec.dim)
                throw IndexOutOfRange(line_no, toks[1].col,
                                      "index " + std::to_string(idx) + " out of range for dim " +
                                          std::to_string(spec.dim));
            const double re = parse_real(toks[2], line_no, "real part");
            const double im = parse_real(toks[3], line_no, "imaginary part");
            auto& map = directive == "pre" ? spec.pre_amplitudes : spec.post_amplitudes;
            if (!map.emplace(idx, cdouble{re, im}).second)
                throw SyntaxError(line_no, toks[1].col,
                                  "duplicate " + std::string(directive) + " amplitude for index " +
                                      std::to_string(idx));
            continue;
        }

        if (directive == "component") {
            if (toks.size() < 3)
                throw SyntaxError(line_no, toks[0].col + 9, "missing component fields");
            const int idx = parse_index(toks[1], line_no, "path index");
            if (idx >= spec.dim)
                throw IndexOutOfRange(line_no, toks[1].col,
                                      "index " + std::to_string(idx) + " out of range for dim " +
                                          std::to_string(spec.dim));
            const std::string_view kind = toks[2].text;
            PathComponent::Kind kind_tag{};
            if (kind == "phase") {
                need_args(toks, 4, line_no);
                kind_tag = PathComponent::Kind::Phase;
                spec.components.add(
                    PathComponent::phase(idx, parse_real(toks[3], line_no, "theta")));
            } else if (kind == "atten") {
                need_args(toks, 4, line_no);
                const double alpha = parse_real(toks[3], line_no, "alpha");
                if (alpha < 0.0) throw SyntaxError(line_no, toks[3].col, "alpha must be >= 0");
                kind_tag = PathComponent::Kind::Attenuator;
                spec.components.add(PathComponent::attenuator(idx, alpha));
            } else if (kind == "cnum") {
                need_args(toks, 5, line_no);
                const double re = parse_real(toks[3], line_no, "real part");
                const double im = parse_real(toks[4], line_no, "imaginary part");
                if (re == 0.0 && im == 0.0)
                    throw SyntaxError(line_no, toks[3].col, "c-number must be nonzero");
                kind_tag = PathComponent::Kind::General;
                spec.components.add(PathComponent::general(idx, cdouble{re, im}));
            } else {
                throw SyntaxError(line_no, toks[2].col,
                                  "unknown component kind '" + std::string(kind) + "'");
            }
            if (!seen_components.emplace(idx, kind_tag).second)
                throw SyntaxError(line_no, toks[1].col,
                                  "second '" + std::string(kind) + "' component on path " +
                                      std::to_string(idx));
            continue;
        }

        throw SyntaxError(line_no, toks[0].col,
                          "unknown directive '" + std::string(directive) + "'");
    }

    if (!have_dim) throw SyntaxError(line_no == 0 ? 1 : line_no, 1, "missing dim");

    const int eof = line_no == 0 ? 1 : line_no;
    const StateVector pre = state_from_map(spec.pre_amplitudes, spec.dim, eof, "pre");
    const StateVector post = state_from_map(spec.post_amplitudes, spec.dim, eof, "post");
    renormalize_map(spec.pre_amplitudes, pre);
    renormalize_map(spec.post_amplitudes, post);
    return spec;
}

std::string serialize_experiment(const ExperimentSpec& spec) {
    std::string out = "# wvx v1\n";
    out += "dim " + std::to_string(spec.dim) + "\n";
    if (!spec.name.empty()) out += "name " + spec.name + "\n";
    for (const auto& [idx, a] : spec.pre_amplitudes)
        out += "pre " + std::to_string(idx) + " " + format_double(a.real()) + " " +
               format_double(a.imag()) + "\n";
    for (const auto& [idx, a] : spec.post_amplitudes)
        out += "post " + std::to_string(idx) + " " + format_double(a.real()) + " " +
               format_double(a.imag()) + "\n";
    for (const auto& [path, comp] : spec.components) {
        out += "component " + std::to_string(path) + " ";
        switch (comp.kind()) {
            case PathComponent::Kind::Phase:
                out += "phase " + format_double(comp.theta());
                break;
            case PathComponent::Kind::Attenuator:
                out += "atten " + format_double(comp.alpha());
                break;
            case PathComponent::Kind::General:
                out += "cnum " + format_double(comp.c().real()) + " " +
                       format_double(comp.c().imag());
                break;
        }
        out += "\n";
    }
    return out;
}

}  // namespace wv
