#include "ncsym/set_partition.hpp"

#include <map>

namespace ncsym {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    const int d = degree();
    if (d < 1) throw std::invalid_argument("Perm: degree must be positive");
    std::vector<char> seen(d + 1, 0);
    for (int v : img_) {
        if (v < 1 || v > d || seen[v]) throw std::invalid_argument("Perm: not a bijection on 1..d");
        seen[v] = 1;
    }
}

Perm Perm::identity(int d) {
    std::vector<int> img(d);
    std::iota(img.begin(), img.end(), 1);
    return Perm(std::move(img));
}

Perm Perm::transposition(int d, int i, int j) {
    Perm p = identity(d);
    if (i < 1 || j < 1 || i > d || j > d)
        throw std::invalid_argument("Perm::transposition: index out of range");
    std::swap(p.img_[i - 1], p.img_[j - 1]);
    return p;
}

int Perm::operator()(int i) const {
    if (i < 1 || i > degree()) throw std::invalid_argument("Perm: argument out of range");
    return img_[i - 1];
}

Perm Perm::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < degree(); ++i) inv[img_[i] - 1] = i + 1;
    return Perm(std::move(inv));
}

Perm Perm::after(const Perm& inner) const {
    if (degree() != inner.degree()) throw std::invalid_argument("Perm::after: degree mismatch");
    std::vector<int> img(img_.size());
    for (int i = 0; i < degree(); ++i) img[i] = img_[inner.img_[i] - 1];
    return Perm(std::move(img));
}

namespace {
// Renumber arbitrary labels by first occurrence; result is a canonical rgs.
std::vector<std::uint8_t> canonical_labels(const std::vector<std::uint8_t>& raw) {
    std::vector<int> remap(256, -1);
    std::vector<std::uint8_t> out(raw.size());
    int next = 0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        int& slot = remap[raw[i]];
        if (slot < 0) slot = next++;
        out[i] = static_cast<std::uint8_t>(slot);
    }
    return out;
}
}  // namespace

SetPartition::SetPartition(const std::vector<std::vector<int>>& blocks) {
    int d = 0;
    for (const auto& b : blocks) d += static_cast<int>(b.size());
    if (d < 1) throw std::invalid_argument("SetPartition: empty partition");
    if (d > 255) throw std::invalid_argument("SetPartition: degree too large");
    std::vector<int> owner(d + 1, -1);
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        if (blocks[bi].empty()) throw std::invalid_argument("SetPartition: empty block");
        for (int e : blocks[bi]) {
            if (e < 1 || e > d || owner[e] >= 0)
                throw std::invalid_argument("SetPartition: blocks must partition 1..d");
            owner[e] = static_cast<int>(bi);
        }
    }
    std::vector<std::uint8_t> raw(d);
    for (int e = 1; e <= d; ++e) raw[e - 1] = static_cast<std::uint8_t>(owner[e]);
    rgs_ = canonical_labels(raw);
}

SetPartition SetPartition::from_labels(std::vector<std::uint8_t> labels) {
    if (labels.empty()) throw std::invalid_argument("SetPartition: empty partition");
    SetPartition p;
    p.rgs_ = canonical_labels(labels);
    return p;
}

SetPartition SetPartition::singletons(int d) {
    if (d < 1) throw std::invalid_argument("SetPartition: degree must be positive");
    if (d > 255) throw std::invalid_argument("SetPartition: degree too large");
    std::vector<std::uint8_t> rgs(d);
    for (int i = 0; i < d; ++i) rgs[i] = static_cast<std::uint8_t>(i);
    return from_labels(std::move(rgs));
}

SetPartition SetPartition::one_block(int d) {
    if (d < 1) throw std::invalid_argument("SetPartition: degree must be positive");
    return from_labels(std::vector<std::uint8_t>(d, 0));
}

int SetPartition::block_count() const {
    int m = 0;
    for (std::uint8_t x : rgs_) m = std::max(m, x + 1);
    return m;
}

int SetPartition::block_of(int element) const {
    if (element < 1 || element > degree())
        throw std::invalid_argument("SetPartition::block_of: element out of range");
    return rgs_[element - 1];
}

int SetPartition::block_size_of(int element) const {
    const std::uint8_t id = rgs_[element - 1];
    int n = 0;
    for (std::uint8_t x : rgs_) n += (x == id);
    return n;
}

std::vector<std::vector<int>> SetPartition::blocks() const {
    std::vector<std::vector<int>> out(block_count());
    for (int e = 1; e <= degree(); ++e) out[rgs_[e - 1]].push_back(e);
    return out;
}

std::string slash_string(const SetPartition& p) {
    const auto blks = p.blocks();
    const bool compact = p.degree() <= 9;
    std::string s;
    for (std::size_t i = 0; i < blks.size(); ++i) {
        if (i) s += '/';
        for (std::size_t j = 0; j < blks[i].size(); ++j) {
            if (j && !compact) s += '.';
            s += std::to_string(blks[i][j]);
        }
    }
    return s;
}

bool leq(const SetPartition& sigma, const SetPartition& pi) {
    if (sigma.degree() != pi.degree()) throw std::invalid_argument("leq: degree mismatch");
    // sigma <= pi iff co-blocked in sigma implies co-blocked in pi,
    // i.e. each sigma block maps into a single pi block.
    const int d = sigma.degree();
    std::vector<int> img(sigma.block_count(), -1);
    for (int e = 1; e <= d; ++e) {
        int sb = sigma.block_of(e), pb = pi.block_of(e);
        if (img[sb] < 0)
            img[sb] = pb;
        else if (img[sb] != pb)
            return false;
    }
    return true;
}

SetPartition meet(const SetPartition& a, const SetPartition& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("meet: degree mismatch");
    const int d = a.degree();
    std::vector<std::uint8_t> raw(d);
    std::map<std::pair<int, int>, int> ids;
    for (int e = 1; e <= d; ++e) {
        auto key = std::make_pair(a.block_of(e), b.block_of(e));
        auto [it, fresh] = ids.emplace(key, static_cast<int>(ids.size()));
        if (it->second > 255) throw std::invalid_argument("meet: degree too large");
        raw[e - 1] = static_cast<std::uint8_t>(it->second);
        (void)fresh;
    }
    return SetPartition::from_labels(std::move(raw));
}

long long mobius(const SetPartition& sigma, const SetPartition& tau) {
    if (!leq(sigma, tau)) throw std::invalid_argument("mobius: arguments not comparable");
    // Product over tau blocks of (-1)^(n-1) (n-1)! where n counts sigma blocks inside.
    const int d = sigma.degree();
    std::vector<int> count(tau.block_count(), 0);
    std::vector<char> seen(sigma.block_count(), 0);
    for (int e = 1; e <= d; ++e) {
        int sb = sigma.block_of(e);
        if (!seen[sb]) {
            seen[sb] = 1;
            ++count[tau.block_of(e)];
        }
    }
    long long mu = 1;
    for (int n : count) {
        for (int j = 2; j < n; ++j) mu *= j;
        if (n % 2 == 0) mu = -mu;
    }
    return mu;
}

long long mobius_from_bottom(const SetPartition& tau) {
    long long mu = 1;
    for (const auto& b : tau.blocks()) {
        const int n = static_cast<int>(b.size());
        for (int j = 2; j < n; ++j) mu *= j;
        if (n % 2 == 0) mu = -mu;
    }
    return mu;
}

IntegerPartition shape(const SetPartition& p) {
    std::vector<int> sizes(p.block_count(), 0);
    for (std::uint8_t x : p.labels()) ++sizes[x];
    return IntegerPartition(std::move(sizes));
}

long long aut_constant(const SetPartition& p) {
    const auto sh = shape(p);
    long long c = 1;
    int run = 1;
    for (std::size_t i = 1; i <= sh.parts.size(); ++i) {
        if (i < sh.parts.size() && sh.parts[i] == sh.parts[i - 1]) {
            ++run;
        } else {
            for (int j = 2; j <= run; ++j) c *= j;
            run = 1;
        }
    }
    return c;
}

long long factorial_constant(const SetPartition& p) {
    long long c = 1;
    for (int part : shape(p).parts)
        for (int j = 2; j <= part; ++j) c *= j;
    return c;
}

SetPartition insert_into_block_of_last(const SetPartition& p) {
    auto rgs = p.labels();
    rgs.push_back(rgs.back());
    return SetPartition::from_labels(std::move(rgs));
}

SetPartition new_singleton(const SetPartition& p) {
    auto rgs = p.labels();
    rgs.push_back(static_cast<std::uint8_t>(p.block_count()));
    return SetPartition::from_labels(std::move(rgs));
}

SetPartition add_elements(const SetPartition& p, int count) {
    if (count < 0) throw std::invalid_argument("add_elements: negative count");
    auto rgs = p.labels();
    for (int i = 0; i < count; ++i) rgs.push_back(rgs.back());
    return SetPartition::from_labels(std::move(rgs));
}

SetPartition insert_copy(const SetPartition& p, int anchor, int pos) {
    const int d = p.degree();
    if (anchor < 1 || pos <= anchor || pos > d + 1)
        throw std::invalid_argument("insert_copy: need 1 <= anchor < pos <= degree+1");
    const auto& rgs = p.labels();
    std::vector<std::uint8_t> out;
    out.reserve(d + 1);
    out.insert(out.end(), rgs.begin(), rgs.begin() + (pos - 1));
    out.push_back(rgs[anchor - 1]);
    out.insert(out.end(), rgs.begin() + (pos - 1), rgs.end());
    return SetPartition::from_labels(std::move(out));
}

SetPartition apply_perm(const Perm& delta, const SetPartition& p) {
    if (delta.degree() != p.degree()) throw std::invalid_argument("apply_perm: degree mismatch");
    const int d = p.degree();
    std::vector<std::uint8_t> raw(d);
    for (int e = 1; e <= d; ++e) raw[delta(e) - 1] = static_cast<std::uint8_t>(p.block_of(e));
    return SetPartition::from_labels(std::move(raw));
}

SetPartition union_shifted(const SetPartition& a, const SetPartition& b) {
    auto rgs = a.labels();
    const int off = a.block_count();
    for (std::uint8_t x : b.labels()) rgs.push_back(static_cast<std::uint8_t>(x + off));
    return SetPartition::from_labels(std::move(rgs));
}

unsigned long long bell_number(int d) {
    if (d < 0) throw std::invalid_argument("bell_number: negative degree");
    std::vector<unsigned long long> row{1};
    for (int i = 0; i < d; ++i) {
        std::vector<unsigned long long> next{row.back()};
        for (unsigned long long x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

std::vector<SetPartition> enumerate_partitions(int d, const RunConfig& cfg) {
    std::vector<SetPartition> out;
    out.reserve(bell_number(d));
    for_each_partition(d, [&](const SetPartition& p) { out.push_back(p); }, cfg);
    return out;
}

std::vector<SetPartition> enumerate_Palpha(const SetPartition& p, const Composition& alpha,
                                           int marked) {
    const int d = p.degree();
    if (alpha.sum() != d + 1)
        throw std::invalid_argument("enumerate_Palpha: alpha must compose degree+1");
    if (marked != d && marked != d + 1)
        throw std::invalid_argument("enumerate_Palpha: marked element must be d or d+1");
    const SetPartition base = insert_into_block_of_last(p);
    std::vector<int> rest(alpha.parts.begin() + 1, alpha.parts.end());
    std::sort(rest.begin(), rest.end());
    std::vector<SetPartition> out;
    for_each_refinement(base, [&](const SetPartition& tau, long long) {
        if (tau.block_count() != alpha.length()) return;
        if (tau.block_size_of(marked) != alpha.parts[0]) return;
        const int mb = tau.block_of(marked);
        std::vector<int> sizes;
        const auto blks = tau.blocks();
        for (int bi = 0; bi < static_cast<int>(blks.size()); ++bi)
            if (bi != mb) sizes.push_back(static_cast<int>(blks[bi].size()));
        std::sort(sizes.begin(), sizes.end());
        if (sizes == rest) out.push_back(tau);
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ncsym
