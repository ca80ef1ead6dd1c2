#pragma once

#include <map>
#include <string>
#include <vector>

#include "blockforest/series.hpp"
#include "blockforest/weight_poly.hpp"

namespace blockforest {

long euler_totient(long m);

// Rooted/unrooted counting series of one species, plus the helper series
// the recurrences run on. Coefficient of x^0 is always 0 and the rooted
// series starts with x.
struct UnlabeledSeriesBundle {
    Series<Rat> rooted;
    Series<Rat> unrooted;
    std::map<std::string, Series<Rat>> auxiliaries;
};

struct WeightedUnlabeledBundle {
    Series<WeightPoly> rooted;
    Series<WeightPoly> unrooted;
    std::vector<Series<WeightPoly>> rooted_powers; // index j = rooted^j
    std::map<std::string, Series<WeightPoly>> auxiliaries;
};

// Exact-equality guard between two computation routes; throws
// internal_consistency_error naming the invariant and the first
// mismatching coefficient.
template <typename C>
void require_series_equal(const Series<C>& a, const Series<C>& b, const std::string& invariant) {
    a.check_order(b);
    for (int i = 0; i <= a.order(); ++i)
        if (!(a[i] == b[i]))
            throw internal_consistency_error(invariant + ": routes disagree at x^" +
                                             std::to_string(i));
}

// --- individual computation routes (exposed so tests can cross them) ---

Series<Rat> triangular_rooted_recurrence(int order);
Series<Rat> triangular_rooted_fixed_point(int order);
Series<Rat> triangular_unrooted_recurrence(const Series<Rat>& rooted);
Series<Rat> triangular_unrooted_series_form(const Series<Rat>& rooted);

// Recurrence scheme for rooted Husimi graphs; fills phi (and b) alongside.
// All series share the given order; phi is needed one index past the
// unrooted order, so callers pass order+1 internally.
struct HusimiRecurrence {
    Series<Rat> rooted;
    Series<Rat> phi;
    Series<Rat> b;
};
HusimiRecurrence husimi_rooted_recurrence(int order);
Series<Rat> husimi_rooted_fixed_point(int order);
Series<Rat> husimi_phi_from_rooted(const Series<Rat>& rooted);
Series<Rat> husimi_unrooted_recurrence(const HusimiRecurrence& rec, int order);
Series<Rat> husimi_unrooted_series_form(const HusimiRecurrence& rec, int order);

struct OrientedRecurrence {
    Series<WeightPoly> rooted;
    Series<WeightPoly> b;
};
OrientedRecurrence oriented_rooted_recurrence(int order);
Series<WeightPoly> oriented_rooted_fixed_point(int order);
Series<WeightPoly> oriented_unrooted_recurrence(const Series<WeightPoly>& rooted);
Series<WeightPoly> oriented_unrooted_series_form(const Series<WeightPoly>& rooted);

// --- assembled engines: both routes computed and compared exactly ---

UnlabeledSeriesBundle triangular_cactus_series(int order);
UnlabeledSeriesBundle husimi_series(int order);
WeightedUnlabeledBundle oriented_cactus_series(int order);

} // namespace blockforest
