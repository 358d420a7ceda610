#include "dynheight/preperiodic.hpp"

namespace dynheight {

PreperiodicCatalog enumerate_preperiodic_sets(const RationalMap& map, int max_m) {
    if (max_m < 1) throw algebra_error("enumerate_preperiodic_sets: max_m < 1");
    PreperiodicCatalog cat;
    std::vector<HomForm> emitted;
    for (int m = 1; m <= max_m; ++m) {
        for (int n = 0; n < m; ++n) {
            HomForm fresh = HomForm::z0();  // replaced below
            int raw = 0;
            try {
                AlgebraicSet s = preperiodicity_set(map, m, n);
                fresh = s.form();
                raw = s.size();
            } catch (const map_error& e) {
                if (e.kind == MapErrorKind::Budget) {
                    cat.budget_exceeded = true;
                    return cat;
                }
                if (e.kind == MapErrorKind::ZeroForm) continue;  // no new equation
                throw;
            }
            // keep only the points unseen in earlier entries
            bool empty = false;
            for (const HomForm& prev : emitted) {
                HomForm g = form_gcd(fresh, prev);
                if (g.degree() == 0) continue;
                if (g.degree() == fresh.degree()) {
                    empty = true;
                    break;
                }
                fresh = primitive_part(exact_divide(fresh, g));
            }
            if (empty || fresh.degree() == 0) continue;
            AlgebraicSet batch{fresh};
            CatalogEntry entry;
            entry.m = m;
            entry.n = n;
            entry.set = batch;
            entry.raw_degree = raw;
            entry.all_integral = all_algebraic_integers(batch);
            cat.cumulative_size += batch.size();
            emitted.push_back(fresh);
            cat.entries.push_back(std::move(entry));
        }
    }
    return cat;
}

bool all_algebraic_integers(const AlgebraicSet& s) {
    const HomForm& f = s.form();
    int e = f.infinity_root_multiplicity();
    if (e == f.degree()) return true;  // only the point at infinity
    return abs(f.coeffs()[static_cast<size_t>(e)]) == 1;
}

IntegerFilterResult algebraic_integer_filter(const PreperiodicCatalog& catalog) {
    IntegerFilterResult out;
    for (size_t i = 0; i < catalog.entries.size(); ++i) {
        if (all_algebraic_integers(catalog.entries[i].set))
            out.integral.push_back(i);
        else
            out.non_integral.push_back(i);
    }
    return out;
}

std::vector<TrendRow> equidistribution_report(const RationalMap& map, const ProjPointQ& p,
                                              const PreperiodicCatalog& catalog, const Real& m,
                                              const Real& tol) {
    AlgebraicSet orbit = AlgebraicSet::of_point(p);
    std::vector<TrendRow> rows;
    std::optional<HomForm> cumulative;
    for (const CatalogEntry& entry : catalog.entries) {
        if (form_gcd(entry.set.form(), orbit.form()).degree() > 0)
            throw green_error(GreenErrorKind::SharedPoint,
                              "equidistribution_report: the point lies in a catalog set");
        cumulative = cumulative ? *cumulative * entry.set.form() : entry.set.form();
        AlgebraicSet z{*cumulative};
        TrendRow row;
        row.cumulative_degree = z.size();
        row.truncated_average = truncated_green_average(map, z, orbit, m, tol);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace dynheight
