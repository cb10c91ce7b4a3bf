#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hadamard/core.hpp"

namespace had {

// Abelian group Z_{r0} x Z_{r1} x ... with elements coded in mixed radix
// (code = sum d_i * prod_{j<i} r_j). A single radix is the cyclic group.
class Group {
public:
    Group() = default;
    explicit Group(std::vector<int> radices);
    static Group cyclic(int v) { return Group({v}); }
    static Group elementary(int p, int k) { return Group(std::vector<int>(k, p)); }

    int order() const { return order_; }
    bool is_cyclic() const { return radices_.size() == 1; }
    const std::vector<int>& radices() const { return radices_; }
    int add(int a, int b) const;
    int neg(int a) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
    std::string name() const;
    bool operator==(const Group& o) const { return radices_ == o.radices_; }

private:
    std::vector<int> radices_;
    int order_ = 0;
};

struct SdsFamily {
    Group group;
    std::vector<std::vector<int>> sets;
    int lambda = 0;

    int v() const { return group.order(); }
    std::vector<int> ks() const;
};

struct CdsPair {
    int m = 0;
    Group group;
    std::vector<int> a, b;
};

// The common difference count if it is constant over nonzero elements.
std::optional<int> measured_lambda(const Group& g, const std::vector<std::vector<int>>& sets);
bool is_sds(const SdsFamily& f);
bool is_skew_set(const std::vector<int>& s, const Group& g);
bool is_skew_set(const std::vector<int>& s, int v);

// M[x][y] = -1 if y - x is in s, else +1. Circulant for cyclic groups.
Matrix develop(const Group& g, const std::vector<int>& s);

CdsPair complementary_difference_sets(int m);
bool cds_supported(int m);

SdsFamily skew_sds_292();
// Four-set SDS with the first set skew, from data or the order-73 construction.
SdsFamily skew_sds(int v);
bool skew_sds_supported(int v);
// Four-set SDS for a Hadamard matrix of order 4v.
SdsFamily sds(int v);
bool sds_supported(int v);
// 4-{2v; v, v, v, v+1; 2v} family in Z_{2v}.
SdsFamily spence_sds(int v);
bool spence_sds_supported(int v);

}  // namespace had
