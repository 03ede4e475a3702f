#include "relift/editloss.hpp"

#include <algorithm>
#include <numeric>

#include "relift/compiler.hpp"

namespace relift {

int edit_loss(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    const size_t n = a.size(), m = b.size();
    if (n == 0) return static_cast<int>(m);
    if (m == 0) return static_cast<int>(n);
    std::vector<int> prev(m + 1), cur(m + 1);
    std::iota(prev.begin(), prev.end(), 0);
    for (size_t i = 1; i <= n; ++i) {
        cur[0] = static_cast<int>(i);
        for (size_t j = 1; j <= m; ++j) {
            int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

MatchResult verify_match(const Node& candidate, const std::vector<std::string>& target_tokens) {
    AsmProgram prog = compile(candidate);
    int d = edit_loss(prog.tokens(), target_tokens);
    return {d == 0, d};
}

}  // namespace relift
