#include "qtop/colorseries.hpp"

namespace qtop {

std::map<std::pair<Multidegree, int>, SymbolicScalar> extract_D(const ColorSeries& s) {
    std::map<std::pair<Multidegree, int>, SymbolicScalar> out;
    for (const auto& [n, poly] : s.terms())
        for (const auto& [d, c] : poly.mono) out[{d, n}] = c;
    return out;
}

EpsColorSeries epsilon_regularize(const ColorSeries& s) {
    int n = s.ncomp();
    std::vector<std::vector<QRat>> link(n, std::vector<QRat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) link[i][j] = QRat(s.linking()[i][j]);
    for (int j = 0; j < n; ++j) link[j][j] = link[j][j] + QRat::epsilon();
    EpsColorSeries r(n, s.order(), std::move(link));
    for (const auto& [ord, poly] : s.terms())
        for (const auto& [d, c] : poly.mono) r.add_term(ord, d, EpsScalar(c));
    return r;
}

ColorSeries epsilon_limit(const EpsColorSeries& s) {
    int n = s.ncomp();
    std::vector<std::vector<Rat>> link(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) link[i][j] = s.linking()[i][j].limit0();
    ColorSeries r(n, s.order(), std::move(link));
    for (const auto& [ord, poly] : s.terms())
        for (const auto& [d, c] : poly.mono) r.add_term(ord, d, c.limit0());
    return r;
}

} // namespace qtop
