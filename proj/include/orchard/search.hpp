#pragma once

#include "orchard/bounds.hpp"
#include "orchard/constructions.hpp"
#include "orchard/crossings.hpp"
#include "orchard/drawing.hpp"
#include "orchard/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace orchard {

/// Deterministic RNG wrapper. Bounded draws use plain modulo reduction on
/// mt19937_64 output: a hair of bias is irrelevant here and, unlike
/// std::uniform_int_distribution, the mapping is pinned across standard
/// libraries, so seeds reproduce bit-identical runs everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    long long below(long long n) {
        if (n <= 0) throw std::invalid_argument("Rng::below: n must be positive");
        return static_cast<long long>(next() % static_cast<std::uint64_t>(n));
    }

    long long range(long long lo, long long hi) { // inclusive bounds
        return lo + below(hi - lo + 1);
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 gen_;
};

enum class SearchMode { convex_exhaustive, convex_sampled, anneal, construction };

inline const char* search_mode_name(SearchMode m) {
    switch (m) {
        case SearchMode::convex_exhaustive: return "convex_exhaustive";
        case SearchMode::convex_sampled: return "convex_sampled";
        case SearchMode::anneal: return "anneal";
        case SearchMode::construction: return "construction";
    }
    return "?";
}

/// Outcome of a minimization (or maximization) run. Exactly one of
/// best_order / best_drawing is set, depending on the mode; best_count is
/// re-verified against the naive counting oracle before returning.
struct SearchResult {
    long long best_count = 0;
    std::optional<CircularOrder> best_order;
    std::optional<Drawing> best_drawing;
    long long evaluations = 0;
    SearchMode mode = SearchMode::convex_exhaustive;
    std::uint64_t seed = 0;
    std::string warning; // non-empty on a result that contradicts a certified bound
};

enum class Objective { minimize, maximize };

namespace detail {

inline bool better(Objective obj, long long a, const std::vector<int>& ord_a,
                   long long b, const std::vector<int>& ord_b) {
    if (a != b) return obj == Objective::minimize ? a < b : a > b;
    return ord_a < ord_b; // deterministic tie-break: lexicographically least order
}

inline void verify_against_oracle(SearchResult& r, const Graph& g) {
    long long naive = 0;
    if (r.best_order) {
        naive = total_crossings_naive(realize_on_circle(g, *r.best_order));
    } else if (r.best_drawing) {
        naive = total_crossings_naive(*r.best_drawing);
    } else {
        throw std::logic_error("search result carries no drawing");
    }
    if (naive != r.best_count)
        throw std::logic_error("search result failed oracle re-verification: " +
                               std::to_string(r.best_count) + " vs naive " +
                               std::to_string(naive));
}

} // namespace detail

/// Enumerates every canonical circular order of the graph's vertices —
/// (m-1)!/2 of them — and returns the best convex-position count.
/// Deterministic; ties resolve to the lexicographically least canonical
/// order, and the chunked parallel variant reduces with the same rule, so
/// the result is independent of the thread count.
inline SearchResult convex_exhaustive(const Graph& g, Objective obj = Objective::minimize,
                                      int cap = 10, int threads = 1) {
    const int m = g.vertex_count;
    if (m > cap)
        throw std::invalid_argument(
            "convex_exhaustive: " + std::to_string(m) + " vertices exceed the cap of " +
            std::to_string(cap) + " (" + std::to_string(m - 1) +
            "!/2 orders); raise the cap or use convex_sampled");
    SearchResult result;
    result.mode = SearchMode::convex_exhaustive;
    if (m <= 3) {
        std::vector<int> id(m);
        for (int i = 0; i < m; ++i) id[i] = i;
        result.best_order = CircularOrder{id};
        result.best_count = convex_crossings(g, *result.best_order);
        result.evaluations = 1;
        detail::verify_against_oracle(result, g);
        return result;
    }

    struct Best {
        bool any = false;
        long long count = 0;
        std::vector<int> order;
        long long evals = 0;
    };
    // Bucket b fixes order[1] = b + 1; each bucket permutes the rest.
    const int buckets = m - 1;
    std::vector<Best> per_bucket(buckets);
    for_chunks(buckets, threads, [&](int, long long lo, long long hi) {
        for (long long b = lo; b < hi; ++b) {
            Best& best = per_bucket[b];
            const int second = static_cast<int>(b) + 1;
            std::vector<int> tail;
            for (int v = 1; v < m; ++v)
                if (v != second) tail.push_back(v);
            std::vector<int> order(m), pos(m);
            order[0] = 0;
            order[1] = second;
            do {
                if (second > tail.back()) continue; // canonical: order[1] < order[m-1]
                for (std::size_t i = 0; i < tail.size(); ++i) order[2 + i] = tail[i];
                for (int i = 0; i < m; ++i) pos[order[i]] = i;
                const long long c = convex_crossings_pos(g, pos);
                ++best.evals;
                if (!best.any || detail::better(obj, c, order, best.count, best.order)) {
                    best.any = true;
                    best.count = c;
                    best.order = order;
                }
            } while (std::next_permutation(tail.begin(), tail.end()));
        }
    });
    Best overall;
    for (const Best& b : per_bucket) {
        overall.evals += b.evals;
        if (b.any && (!overall.any ||
                      detail::better(obj, b.count, b.order, overall.count, overall.order))) {
            overall.any = true;
            overall.count = b.count;
            overall.order = b.order;
        }
    }
    result.best_count = overall.count;
    result.best_order = CircularOrder{overall.order};
    result.evaluations = overall.evals;
    detail::verify_against_oracle(result, g);
    return result;
}

/// Random sampling of canonical circular orders for graphs past the
/// exhaustive cap.
inline SearchResult convex_sampled(const Graph& g, long long samples, std::uint64_t seed,
                                   Objective obj = Objective::minimize) {
    const int m = g.vertex_count;
    if (samples <= 0) throw std::invalid_argument("convex_sampled: samples must be positive");
    Rng rng(seed);
    SearchResult result;
    result.mode = SearchMode::convex_sampled;
    result.seed = seed;
    std::vector<int> order(m), pos(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    bool any = false;
    long long best_count = 0;
    std::vector<int> best_order;
    for (long long s = 0; s < samples; ++s) {
        for (int i = m - 1; i > 0; --i)
            std::swap(order[i], order[rng.below(i + 1)]);
        CircularOrder canon = CircularOrder::canonical(order);
        for (int i = 0; i < m; ++i) pos[canon.order[i]] = i;
        const long long c = convex_crossings_pos(g, pos);
        ++result.evaluations;
        if (!any || detail::better(obj, c, canon.order, best_count, best_order)) {
            any = true;
            best_count = c;
            best_order = canon.order;
        }
    }
    result.best_count = best_count;
    result.best_order = CircularOrder{best_order};
    detail::verify_against_oracle(result, g);
    return result;
}

/// Simulated-annealing parameters. initial_temperature <= 0 asks for the
/// standard probe (average |delta| over 100 trial moves). Move offsets
/// live on the grid of multiples of 1/2^16, so placements never
/// accumulate denominators beyond initial_denominator * 2^16.
struct AnnealParams {
    Rational initial_temperature = Rational(0);
    Rational cooling_factor = Rational(98, 100);
    int steps_per_temperature = 200;
    long long max_steps = 200000;
    Rational move_scale = Rational(1, 4);
    std::uint64_t seed = 1;

    void validate() const {
        if (!(cooling_factor > 0 && cooling_factor < 1))
            throw std::invalid_argument("cooling_factor must lie in (0, 1)");
        if (steps_per_temperature <= 0 || max_steps <= 0 || !(move_scale > 0))
            throw std::invalid_argument("anneal parameters must be positive");
    }
};

namespace detail {

constexpr long long kMoveGrid = 1LL << 16;

// General-position check for replacing vertex v by `candidate`: the
// candidate must not coincide with any other point and no pair may be
// collinear with it. Directions from the candidate are slope-sorted;
// equal slopes witness a collinear triple.
inline bool placement_accepts(const std::vector<Point>& pts, int v, const Point& candidate) {
    const HomPoint ch = homogenize(candidate);
    std::vector<std::pair<Integer, Integer>> dirs;
    dirs.reserve(pts.size() - 1);
    for (int j = 0; j < static_cast<int>(pts.size()); ++j) {
        if (j == v) continue;
        const HomPoint h = homogenize(pts[j]);
        Integer dx = h.x * ch.w - ch.x * h.w;
        Integer dy = h.y * ch.w - ch.y * h.w;
        if (dx.is_zero() && dy.is_zero()) return false;
        if (dx.sign() < 0 || (dx.is_zero() && dy.sign() < 0)) {
            dx = -dx;
            dy = -dy;
        }
        dirs.emplace_back(std::move(dx), std::move(dy));
    }
    auto cross = [](const std::pair<Integer, Integer>& a, const std::pair<Integer, Integer>& b) {
        return Integer(a.first * b.second - a.second * b.first);
    };
    std::sort(dirs.begin(), dirs.end(),
              [&](const auto& a, const auto& b) { return cross(a, b).sign() > 0; });
    for (std::size_t i = 1; i < dirs.size(); ++i)
        if (cross(dirs[i - 1], dirs[i]).is_zero()) return false;
    return true;
}

inline Point propose_move(const Point& p, const Rational& scale, Rng& rng) {
    const Integer k(static_cast<long long>(
        rational_to_double(scale * Rational(kMoveGrid))));
    const long long reach = k.convert_to<long long>();
    if (reach < 1) throw std::invalid_argument("move_scale below the move grid");
    const Rational dx(Integer(rng.range(-reach, reach)), Integer(kMoveGrid));
    const Rational dy(Integer(rng.range(-reach, reach)), Integer(kMoveGrid));
    return Point{p.x + dx, p.y + dy};
}

} // namespace detail

/// Minimizes total crossings by perturbing one vertex at a time with
/// exact rational offsets. Proposals that break general position are
/// rejected before any evaluation; accepted/rejected moves follow the
/// standard exponential rule on the exact integer deltas. Fully
/// reproducible from the seed.
inline SearchResult anneal(const Drawing& d0, const AnnealParams& params, int threads = 1) {
    params.validate();
    Rng rng(params.seed);
    const Graph& g = d0.graph;
    const int n = g.vertex_count;

    std::vector<Point> pts = d0.placement;
    std::vector<HomPoint> hom = homogenize(pts);
    long long current = total_crossings_hom(g, hom, threads);
    long long best = current;
    std::vector<Point> best_pts = pts;
    long long evaluations = 1;

    double temperature = rational_to_double(params.initial_temperature);
    if (!(temperature > 0)) {
        // Probe: average |delta| over 100 speculative moves.
        long long sum = 0, probes = 0;
        for (int i = 0; i < 100 && n > 0; ++i) {
            const int v = static_cast<int>(rng.below(n));
            const Point cand = detail::propose_move(pts[v], params.move_scale, rng);
            if (!detail::placement_accepts(pts, v, cand)) continue;
            const HomPoint saved = hom[v];
            hom[v] = homogenize(cand);
            const long long c = total_crossings_hom(g, hom, threads);
            hom[v] = saved;
            ++evaluations;
            sum += std::llabs(c - current);
            ++probes;
        }
        temperature = probes ? std::max(1.0, static_cast<double>(sum) / probes) : 1.0;
    }
    const double cooling = rational_to_double(params.cooling_factor);

    for (long long step = 0; step < params.max_steps && n > 0; ++step) {
        if (step > 0 && step % params.steps_per_temperature == 0)
            temperature = std::max(temperature * cooling, 1e-9);
        const int v = static_cast<int>(rng.below(n));
        const Point cand = detail::propose_move(pts[v], params.move_scale, rng);
        if (!detail::placement_accepts(pts, v, cand)) continue;
        const HomPoint saved = hom[v];
        hom[v] = homogenize(cand);
        const long long c = total_crossings_hom(g, hom, threads);
        ++evaluations;
        const long long delta = c - current;
        const bool accept = delta <= 0 ||
                            rng.unit() < std::exp(-static_cast<double>(delta) / temperature);
        if (accept) {
            pts[v] = cand;
            current = c;
            if (current < best) {
                best = current;
                best_pts = pts;
            }
        } else {
            hom[v] = saved;
        }
    }

    SearchResult result;
    result.mode = SearchMode::anneal;
    result.seed = params.seed;
    result.evaluations = evaluations;
    result.best_count = best;
    result.best_drawing = Drawing::make(g, std::move(best_pts));
    detail::verify_against_oracle(result, g);
    return result;
}

/// Uniform random placement on the exact move grid inside a square,
/// rejection-sampled to general position.
inline Drawing random_placement(const Graph& g, Rng& rng, long long half_side = 4) {
    const long long reach = half_side * detail::kMoveGrid;
    std::vector<Point> pts;
    pts.reserve(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) {
        for (int attempt = 0;; ++attempt) {
            if (attempt > 200)
                throw std::runtime_error("random_placement: could not reach general position");
            Point p{Rational(Integer(rng.range(-reach, reach)), Integer(detail::kMoveGrid)),
                    Rational(Integer(rng.range(-reach, reach)), Integer(detail::kMoveGrid))};
            pts.push_back(p);
            if (is_general_position(pts)) break;
            pts.pop_back();
        }
    }
    return Drawing::make(g, std::move(pts));
}

/// Portfolio estimate of the Orchard crossing number: the matching
/// construction (when one exists), exhaustive or sampled convex search,
/// then annealing restarts until the evaluation budget runs out. The
/// winner is re-verified and cross-checked against the certified lower
/// bound and any known exact value; a result below either is flagged as
/// critical rather than silently returned.
inline SearchResult estimate_ocn(const FamilySpec& spec, long long budget,
                                 std::uint64_t seed = 1, int threads = 1,
                                 int convex_cap = 10) {
    spec.validate();
    const Graph g = generate(spec);
    SearchResult best;
    bool have = false;
    long long used = 0;

    auto consider = [&](SearchResult r) {
        used += r.evaluations;
        if (!have || r.best_count < best.best_count) {
            have = true;
            r.evaluations = used;
            best = std::move(r);
        }
    };

    try {
        const Drawing d = best_known_drawing(spec);
        SearchResult r;
        r.mode = SearchMode::construction;
        r.best_count = total_crossings(d, threads);
        r.best_drawing = d;
        r.evaluations = 1;
        r.seed = seed;
        detail::verify_against_oracle(r, g);
        consider(std::move(r));
    } catch (const std::runtime_error&) {
        // No construction attains the closed form; search alone.
    }

    if (g.vertex_count <= convex_cap) {
        consider(convex_exhaustive(g, Objective::minimize, convex_cap, threads));
    } else if (budget > used) {
        consider(convex_sampled(g, std::min<long long>(budget - used, 20000), seed));
    }

    int restart = 0;
    while (used < budget) {
        AnnealParams params;
        params.seed = seed + 1000003ULL * static_cast<std::uint64_t>(restart++);
        params.max_steps = std::min<long long>(budget - used, 20000);
        Rng rng(params.seed ^ 0x9e3779b97f4a7c15ULL);
        consider(anneal(random_placement(g, rng), params, threads));
    }

    best.seed = seed;
    const BoundReport bounds = formula_value(spec);
    if (best.best_count < bounds.lower)
        best.warning = "CRITICAL: search count " + std::to_string(best.best_count) +
                       " beats the certified lower bound " + std::to_string(bounds.lower) +
                       " for " + spec.describe() + "; counting engines disagree with theory";
    else if (bounds.exact && best.best_count < *bounds.exact)
        best.warning = "CRITICAL: search count " + std::to_string(best.best_count) +
                       " beats the stated exact value " + std::to_string(*bounds.exact) +
                       " for " + spec.describe();
    return best;
}

} // namespace orchard
