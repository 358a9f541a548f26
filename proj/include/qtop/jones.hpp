#pragma once

#include "qtop/colorseries.hpp"
#include "qtop/cyclotomic.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace qtop {

// Surgery presentation from a closed-form link family: the family descriptor
// generates both exact evaluations at prime K and 1/K color series.
class FramedLink {
  public:
    struct Unknot {
        long framing = 0;
    };
    struct HopfChain {
        std::vector<long> framings;
    };
    struct TorusKnot {
        long m = 2, p = 3, framing = 0;
    };
    struct DisjointUnion {
        std::vector<FramedLink> children;
    };
    struct ConnectedSum {
        std::vector<FramedLink> children; // each child must be a knot
    };
    using Family = std::variant<Unknot, HopfChain, TorusKnot, DisjointUnion, ConnectedSum>;

    FramedLink() : family_(DisjointUnion{}) {} // the empty link (S^3)
    explicit FramedLink(Family f);

    static FramedLink empty() { return FramedLink(); }
    static FramedLink unknot(long framing) { return FramedLink(Unknot{framing}); }
    static FramedLink hopf_chain(std::vector<long> framings) {
        return FramedLink(HopfChain{std::move(framings)});
    }
    static FramedLink torus_knot(long m, long p, long framing) {
        return FramedLink(TorusKnot{m, p, framing});
    }
    static FramedLink disjoint_union(std::vector<FramedLink> children) {
        return FramedLink(DisjointUnion{std::move(children)});
    }
    static FramedLink connected_sum(std::vector<FramedLink> children) {
        return FramedLink(ConnectedSum{std::move(children)});
    }

    const Family& family() const { return family_; }
    int ncomp() const;
    std::vector<std::vector<long>> linking_matrix() const;
    // the pieces of a completely split link, one per component; nullopt if
    // some piece has more than one component
    std::optional<std::vector<FramedLink>> split_components() const;
    bool is_algebraically_split() const;

    std::string descriptor() const; // canonical JSON text
    static FramedLink parse(const std::string& json_or_empty);

  private:
    Family family_;
};

// Exact colored Jones value at an odd prime K, unknot normalized to
// sin(pi a/K)/sin(pi/K); framing f on component j contributes
// e^{(i pi/2K) f (a_j^2 - 1)}.
CycNumber jones_exact(const FramedLink& link, const std::vector<long>& colors, const CycK& ctx);

// Diagonal-stripped normal form to the given order.
ColorSeries jones_series(const FramedLink& link, int order);

struct FusionRange {
    long a1 = 0, a2 = 0;
    std::vector<long> admissible;
};

FusionRange fusion_range(long a1, long a2);

struct FusionReport {
    bool sum_ok = false;      // [a1][a2] = sum over admissible [a]
    bool twist_ok = false;    // fused twist equals the directly framed cable
    bool meridian_ok = false; // fused meridian equals the chain evaluation
    long meridian_color = 0;
    std::string detail;
    bool all_ok() const { return sum_ok && twist_ok && meridian_ok; }
};

// Exact checks of the fusion decomposition on the 2-cable of the 0-framed
// unknot; requires a1 + a2 - 1 <= K - 1 so the range is not truncated.
FusionReport fusion_identities_check(long a1, long a2, const CycK& ctx, long meridian_color = 2);

// High-precision numeric value of the family closed forms at arbitrary
// integer K >= 2 (test support; K need not be prime here).
BigComplex jones_numeric(const FramedLink& link, const std::vector<long>& colors, long K);

} // namespace qtop
