#pragma once

#include <string>
#include <vector>

#include "witt/opexpr.hpp"
#include "witt/sampling.hpp"

namespace witt {

struct CatalogEntry {
    std::string name;
    std::string expr;      // OperatorExpr text
    bool germ_level;       // evaluate on a cone (true) or a symmetric window
};

// The twelve germ generators of Table 1, with free degrees sampled.
std::vector<CatalogEntry> table1_catalog(RationalSampler& s);

// The sixteen Table-4 rows and five Table-5 rows (globally defined operators),
// with free parameters sampled under the footnote restrictions.
std::vector<CatalogEntry> table4_catalog(RationalSampler& s);
std::vector<CatalogEntry> table5_catalog(RationalSampler& s);

}  // namespace witt
