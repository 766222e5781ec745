#include "nodaljac/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace nodaljac {

namespace {

std::uint64_t parse_u64(std::string_view s, const char* what) {
    std::uint64_t v = 0;
    if (s.empty())
        throw std::invalid_argument(std::string(what) + ": empty number");
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument(std::string(what) + ": malformed number '" +
                                    std::string(s) + "'");
    return v;
}

std::vector<std::uint64_t> parse_coeff_list(std::string_view s, std::uint64_t p,
                                            const char* what) {
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = s.find(',', start);
        std::string_view item = comma == std::string_view::npos
                                    ? s.substr(start)
                                    : s.substr(start, comma - start);
        std::uint64_t v = parse_u64(item, what);
        if (v >= p)
            throw std::invalid_argument(std::string(what) +
                                        ": coefficient not canonical (>= p)");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string coeffs_to_string(const std::vector<std::uint64_t>& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    return s;
}

std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

} // namespace

std::string poly_to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    return coeffs_to_string(f.coeffs());
}

Poly poly_from_string(const PrimeModulus& m, std::string_view text) {
    return Poly(m, parse_coeff_list(text, m.p(), "polynomial"));
}

std::string curve_to_string(const NodalCurve& C) {
    std::string s = "p=" + std::to_string(C.p()) + "\n";
    s += "f=" + poly_to_string(C.f()) + "\n";
    return s;
}

NodalCurve curve_from_string(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line = nl == std::string_view::npos
                                    ? text.substr(start)
                                    : text.substr(start, nl - start);
        line = strip_cr(line);
        if (!line.empty()) lines.push_back(line);
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    if (lines.size() != 2)
        throw std::invalid_argument("curve file: expected two lines p=... and f=...");
    if (!lines[0].starts_with("p="))
        throw std::invalid_argument("curve file: first line must start with p=");
    if (!lines[1].starts_with("f="))
        throw std::invalid_argument("curve file: second line must start with f=");

    PrimeModulus m(parse_u64(lines[0].substr(2), "curve file p"));
    Poly f = poly_from_string(m, lines[1].substr(2));
    return NodalCurve(m, std::move(f));
}

void write_curve_file(const NodalCurve& C, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << curve_to_string(C);
    if (!out) throw IoError("write failed: " + path.string());
}

NodalCurve read_curve_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open curve file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return curve_from_string(buf.str());
}

std::string element_to_string(const NodalCurve& C, const JacElement& D) {
    if (D.is_identity()) return "identity";
    std::vector<std::uint64_t> c(C.degree(), 0);
    const auto& rc = D.rep().coeffs();
    std::copy(rc.begin(), rc.end(), c.begin());
    return "h=" + coeffs_to_string(c);
}

ParsedElement parse_element_text(const NodalCurve& C, std::string_view text) {
    if (text == "identity") return {true, Poly(C.p())};
    if (!text.starts_with("h="))
        throw std::invalid_argument("element: expected 'identity' or 'h=<coeffs>'");
    auto coeffs = parse_coeff_list(text.substr(2), C.p(), "element");
    if (static_cast<int>(coeffs.size()) != C.degree())
        throw std::invalid_argument("element: expected exactly " +
                                    std::to_string(C.degree()) + " coefficients");
    return {false, Poly(C.p(), std::move(coeffs))};
}

JacElement element_from_string(const NodalCurve& C, std::string_view text) {
    ParsedElement pe = parse_element_text(C, text);
    if (pe.identity) return JacElement::identity();
    return JacElement::from_rep(C, std::move(pe.rep));
}

std::string divisor_to_string(const MumfordDivisor& D) {
    return "u=" + poly_to_string(D.u) + ";v=" + poly_to_string(D.v);
}

MumfordDivisor divisor_from_string(const PrimeModulus& m, std::string_view text) {
    std::size_t semi = text.find(';');
    if (semi == std::string_view::npos || !text.starts_with("u=") ||
        text.substr(semi + 1).substr(0, 2) != "v=")
        throw std::invalid_argument("divisor: expected 'u=<coeffs>;v=<coeffs>'");
    Poly u = poly_from_string(m, text.substr(2, semi - 2));
    Poly v = poly_from_string(m, text.substr(semi + 3));
    return {std::move(u), std::move(v)};
}

} // namespace nodaljac
