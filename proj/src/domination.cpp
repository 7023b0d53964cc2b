#include "ijdom/domination.hpp"

#include <algorithm>

#include "ijdom/errors.hpp"

namespace ijdom {

DominationCertificate is_1j_dominating(const Graph& g, const std::vector<int>& s, int j) {
    int n = g.order();
    std::vector<char> in(static_cast<size_t>(n) + 1, 0);
    for (int v : s) {
        if (v < 1 || v > n)
            throw InputError("vertex " + std::to_string(v) + " out of range [1," +
                             std::to_string(n) + "]");
        in[static_cast<size_t>(v)] = 1;
    }
    DominationCertificate cert;
    cert.j = j;
    for (int v = 1; v <= n; ++v)
        if (in[static_cast<size_t>(v)]) cert.vertices.push_back(v);
    cert.valid = true;
    for (int v = 1; v <= n; ++v) {
        if (in[static_cast<size_t>(v)]) continue;
        int cnt = 0;
        for (int u : g.neighbors(v))
            if (in[static_cast<size_t>(u)]) ++cnt;
        if (cnt < 1 || cnt > j) {
            cert.valid = false;
            cert.violations.emplace_back(v, cnt);
        }
    }
    return cert;
}

}  // namespace ijdom
