#include "schubitope/types.hpp"

namespace schub {

std::vector<int> subset_elements(Subset s) {
    std::vector<int> out;
    for (int k = 1; s; ++k, s >>= 1)
        if (s & 1u) out.push_back(k);
    return out;
}

Subset subset_from_elements(const std::vector<int>& elems, int n) {
    Subset s = 0;
    for (int e : elems) {
        if (e < 1 || e > n)
            throw input_error("subset element " + std::to_string(e) + " outside 1.." +
                              std::to_string(n));
        s = with(s, e);
    }
    return s;
}

}  // namespace schub
