#include "tanaka/catalog.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tanaka::catalog {

namespace {

void put(StructureConstants& sc, std::size_t i, std::size_t j, std::size_t target, const Scalar& c = 1) {
    if (i < j) sc[{i, j}].emplace_back(target, c);
    else sc[{j, i}].emplace_back(target, -c);
}

std::size_t parse_count(const std::string& key, const std::string& value) {
    if (value.empty() || value.size() > 6 || !std::all_of(value.begin(), value.end(), ::isdigit))
        throw std::invalid_argument("parameter " + key + " must be a non-negative integer, got '" + value + "'");
    return std::stoul(value);
}

} // namespace

Algebra goursat(std::size_t n) {
    if (n < 2) throw std::invalid_argument("goursat needs n >= 2");
    std::vector<BasisElement> basis{{"X", -1}};
    for (std::size_t i = 1; i < n; ++i) basis.push_back({"Z" + std::to_string(i), -static_cast<int>(i)});
    StructureConstants sc;
    for (std::size_t i = 1; i + 1 < n; ++i) put(sc, 0, i, i + 1);
    return Algebra("goursat" + std::to_string(n), std::move(basis), sc);
}

Algebra heisenberg(std::size_t dim) {
    if (dim < 3 || dim % 2 == 0) throw std::invalid_argument("heisenberg needs odd dim >= 3");
    const std::size_t n = (dim - 1) / 2;
    std::vector<BasisElement> basis;
    if (n == 1) {
        basis = {{"X", -1}, {"Y", -1}};
    } else {
        for (std::size_t i = 1; i <= n; ++i) basis.push_back({"X" + std::to_string(i), -1});
        for (std::size_t i = 1; i <= n; ++i) basis.push_back({"Y" + std::to_string(i), -1});
    }
    basis.push_back({"Z", -2});
    StructureConstants sc;
    for (std::size_t i = 0; i < n; ++i) put(sc, i, n + i, 2 * n);
    return Algebra("heisenberg" + std::to_string(dim), std::move(basis), sc);
}

Algebra mixedjet(std::size_t k) {
    if (k < 2) throw std::invalid_argument("mixedjet needs k >= 2");
    std::vector<BasisElement> basis{{"X", -1}, {"Z1", -1}, {"Z2", -2}};
    for (std::size_t i = 1; i <= k; ++i) basis.push_back({"Y" + std::to_string(i), -static_cast<int>(i)});
    StructureConstants sc;
    put(sc, 0, 1, 2);
    for (std::size_t i = 1; i < k; ++i) put(sc, 0, 2 + i, 3 + i);
    return Algebra("mixedjet" + std::to_string(k), std::move(basis), sc);
}

Algebra nontrivial6() {
    // X Z1 Y1 | Z2 Y2 | Y3
    std::vector<BasisElement> basis{{"X", -1}, {"Z1", -1}, {"Y1", -1}, {"Z2", -2}, {"Y2", -2}, {"Y3", -3}};
    StructureConstants sc;
    put(sc, 0, 2, 4);
    put(sc, 0, 4, 5);
    put(sc, 0, 1, 3);
    put(sc, 1, 3, 5);
    return Algebra("nontrivial6", std::move(basis), sc);
}

Algebra free2step3() {
    std::vector<BasisElement> basis{{"X1", -1}, {"X2", -1}, {"X3", -1}, {"X12", -2}, {"X13", -2}, {"X23", -2}};
    StructureConstants sc;
    put(sc, 0, 1, 3);
    put(sc, 0, 2, 4);
    put(sc, 1, 2, 5);
    return Algebra("free2step3", std::move(basis), sc);
}

Algebra kgen(std::size_t k) {
    if (k < 3) throw std::invalid_argument("kgen needs k >= 3");
    std::vector<BasisElement> basis;
    for (std::size_t i = 1; i <= k; ++i) basis.push_back({"X" + std::to_string(i), -1});
    for (std::size_t i = 1; i <= 3; ++i) basis.push_back({"Y" + std::to_string(i), -2});
    StructureConstants sc;
    // 1-based pairs (i, sum - i) with i < sum - i <= k
    auto family = [&](std::size_t sum, std::size_t first, std::size_t target) {
        for (std::size_t i = first; 2 * i < sum; ++i)
            if (sum - i <= k) put(sc, i - 1, sum - i - 1, k + target);
    };
    family(k + 1, 1, 0);
    family(k, 1, 1);
    family(k + 2, 2, 2);
    return Algebra("kgen" + std::to_string(k), std::move(basis), sc);
}

Algebra from_pencil(const PencilSpec& spec) { return algebra_from_pencil(spec); }

const std::vector<std::string>& names() {
    static const std::vector<std::string> all{"goursat", "heisenberg", "mixedjet", "nontrivial6",
                                              "free2step3", "kgen", "from_pencil"};
    return all;
}

Algebra build(const std::string& name, const std::map<std::string, std::string>& params) {
    static const std::map<std::string, std::set<std::string>> keys{
        {"goursat", {"n"}}, {"heisenberg", {"dim"}}, {"mixedjet", {"k"}}, {"nontrivial6", {}},
        {"free2step3", {}}, {"kgen", {"k"}},         {"from_pencil", {"blocks"}}};
    const auto it = keys.find(name);
    if (it == keys.end()) throw std::invalid_argument("unknown catalog entry '" + name + "'");
    for (const auto& [k, v] : params)
        if (!it->second.count(k)) throw std::invalid_argument("'" + name + "' does not take parameter '" + k + "'");
    auto need = [&](const std::string& key) -> const std::string& {
        const auto p = params.find(key);
        if (p == params.end()) throw std::invalid_argument("'" + name + "' needs parameter " + key);
        return p->second;
    };
    if (name == "goursat") return goursat(parse_count("n", need("n")));
    if (name == "heisenberg") return heisenberg(parse_count("dim", need("dim")));
    if (name == "mixedjet") return mixedjet(parse_count("k", need("k")));
    if (name == "kgen") return kgen(parse_count("k", need("k")));
    if (name == "nontrivial6") return nontrivial6();
    if (name == "free2step3") return free2step3();
    return from_pencil(parse_pencil_blocks(need("blocks")));
}

} // namespace tanaka::catalog
