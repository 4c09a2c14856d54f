#include <cstdint>

#include "json.hpp"
#include "spherelab/sphere7.hpp"

namespace spherelab::sphere7 {

namespace {

bool valid_index(int i) { return i >= 1 && i <= 7; }

// Small deterministic generator for validation vectors only.
double lcg_uniform(std::uint64_t& state) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(state >> 11) * 0x1.0p-53 * 2.0 - 1.0;
}

}  // namespace

CrossTable::CrossTable(std::string id, std::vector<SignedTriple> triples)
    : id_(std::move(id)), triples_(std::move(triples)) {
    if (triples_.size() != 7) throw DomainError("cross table needs exactly 7 triples");
    for (const auto& t : triples_) {
        if (!valid_index(t.i) || !valid_index(t.j) || !valid_index(t.k)) {
            throw DomainError("cross table index out of range 1..7");
        }
        if (t.i == t.j || t.j == t.k || t.i == t.k) throw DomainError("cross table triple repeats an index");
        if (t.sign != 1 && t.sign != -1) throw DomainError("cross table sign must be +1 or -1");
        const std::array<std::array<int, 3>, 3> cyc{{{t.i, t.j, t.k}, {t.j, t.k, t.i}, {t.k, t.i, t.j}}};
        for (const auto& [a, b, c] : cyc) {
            auto& fwd = target_[a - 1][b - 1];
            auto& rev = target_[b - 1][a - 1];
            if (fwd != 0 || rev != 0) throw DomainError("cross table assigns a basis pair twice");
            fwd = c;
            rev = c;
            sign_[a - 1][b - 1] = t.sign;
            sign_[b - 1][a - 1] = -t.sign;
        }
    }
    for (int a = 0; a < 7; ++a) {
        for (int b = 0; b < 7; ++b) {
            if (a != b && target_[a][b] == 0) throw DomainError("cross table leaves a basis pair undefined");
        }
    }
    std::uint64_t state = 0x5eed7ab1eULL;
    for (int n = 0; n < 64; ++n) {
        Vec7 x, y;
        for (std::size_t i = 0; i < 7; ++i) {
            x[i] = lcg_uniform(state);
            y[i] = lcg_uniform(state);
        }
        const Vec7 c = cross(x, y);
        const double lhs = dot(c, c);
        const double rhs = dot(x, x) * dot(y, y) - dot(x, y) * dot(x, y);
        if (std::abs(lhs - rhs) > 1e-9 * (1.0 + std::abs(rhs))) {
            throw DomainError("cross table '" + id_ + "' violates |x×y|² = |x|²|y|² − (x·y)²");
        }
    }
}

const CrossTable& CrossTable::cyclic() {
    static const CrossTable table("cyclic", {{1, 2, 4, 1},
                                             {2, 3, 5, 1},
                                             {3, 4, 6, 1},
                                             {4, 5, 7, 1},
                                             {5, 6, 1, 1},
                                             {6, 7, 2, 1},
                                             {7, 1, 3, 1}});
    return table;
}

const CrossTable& CrossTable::cayley() {
    static const CrossTable table("cayley", {{1, 2, 3, 1},
                                             {1, 4, 5, 1},
                                             {1, 7, 6, 1},
                                             {2, 5, 7, 1},
                                             {2, 4, 6, 1},
                                             {3, 4, 7, 1},
                                             {3, 6, 5, 1}});
    return table;
}

CrossTable CrossTable::from_json(const std::string& text) {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("cross table JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("id") || !doc.contains("triples") || !doc["triples"].is_array()) {
        throw FormatError("cross table JSON needs string 'id' and array 'triples'");
    }
    std::vector<SignedTriple> triples;
    for (const auto& t : doc["triples"]) {
        if (!t.is_array() || t.size() != 4) throw FormatError("each triple is [i, j, k, sign]");
        triples.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>(), t[3].get<int>()});
    }
    return CrossTable(doc["id"].get<std::string>(), std::move(triples));
}

std::string CrossTable::to_json() const {
    nlohmann::ordered_json doc;
    doc["id"] = id_;
    doc["triples"] = nlohmann::ordered_json::array();
    for (const auto& t : triples_) doc["triples"].push_back({t.i, t.j, t.k, t.sign});
    return doc.dump();
}

int CrossTable::coefficient(int i, int j, int k) const {
    if (!valid_index(i) || !valid_index(j) || !valid_index(k)) throw DomainError("basis index out of range");
    if (i == j || target_[i - 1][j - 1] != k) return 0;
    return sign_[i - 1][j - 1];
}

std::pair<int, int> CrossTable::basis_product(int i, int j) const {
    if (!valid_index(i) || !valid_index(j)) throw DomainError("basis index out of range");
    if (i == j) return {0, 0};
    return {target_[i - 1][j - 1], sign_[i - 1][j - 1]};
}

Vec7 CrossTable::cross(const Vec7& x, const Vec7& y) const {
    Vec7 r;
    for (std::size_t a = 0; a < 7; ++a) {
        for (std::size_t b = 0; b < 7; ++b) {
            if (a == b) continue;
            r[static_cast<std::size_t>(target_[a][b] - 1)] += sign_[a][b] * (x[a] * y[b]);
        }
    }
    return r;
}

}  // namespace spherelab::sphere7
