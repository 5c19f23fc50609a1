#include "fiblike/report.hpp"

#include <algorithm>

namespace fiblike {

std::uint64_t IdentityReport::degenerate_failures() const noexcept
{
    return std::uint64_t(std::count_if(degenerate.begin(), degenerate.end(),
                                       [](const CaseRecord& c) { return c.residual != 0; }));
}

bool params_less(const std::vector<BigRat>& a, const std::vector<BigRat>& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace fiblike
