#include "lo/symmetry_group.hpp"

#include <algorithm>
#include <numeric>

namespace lo {

namespace {

constexpr std::uint64_t kMaxGroupEvents = 65536;

std::vector<std::vector<int>> all_permutations(int size)
{
    std::vector<int> p(size);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

SymmetryGroup::SymmetryGroup(const Scenario& sc) : scenario_(sc)
{
    if (sc.event_count() > kMaxGroupEvents)
        throw CapacityExceeded("scenario too large for symmetry-group enumeration");
    const int n = sc.parties();
    const int m = sc.settings();
    const int d = sc.outcomes();
    base_ = std::uint32_t(m) * std::uint32_t(d);
    if (base_ > 256)
        throw CapacityExceeded("per-party code must fit one byte");

    party_perms_ = all_permutations(n);
    const auto setting_perms = all_permutations(m);
    const auto outcome_perms = all_permutations(d);

    // one local table per (setting permutation, outcome permutation per setting)
    std::vector<std::size_t> outcome_choice(m, 0);
    for (const auto& sp : setting_perms) {
        while (true) {
            std::vector<std::uint8_t> table(base_);
            for (int s = 0; s < m; ++s)
                for (int a = 0; a < d; ++a)
                    table[std::size_t(s) * d + a] =
                        std::uint8_t(sp[s] * d + outcome_perms[outcome_choice[s]][a]);
            locals_.push_back(std::move(table));

            int pos = m - 1;
            while (pos >= 0 && ++outcome_choice[pos] == outcome_perms.size())
                outcome_choice[pos--] = 0;
            if (pos < 0)
                break;
        }
    }
    local_preimage0_.resize(locals_.size());
    for (std::size_t l = 0; l < locals_.size(); ++l)
        for (std::uint32_t c = 0; c < base_; ++c)
            if (locals_[l][c] == 0)
                local_preimage0_[l] = std::uint8_t(c);

    locals_per_party_pow_ = 1;
    for (int i = 0; i < n; ++i)
        locals_per_party_pow_ *= locals_.size();
    size_ = party_perms_.size() * locals_per_party_pow_;

    place_.resize(n);
    std::uint64_t p = 1;
    for (int i = n - 1; i >= 0; --i) {
        place_[i] = p;
        p *= base_;
    }

    digits_.resize(sc.event_count() * std::size_t(n));
    for (std::uint64_t e = 0; e < sc.event_count(); ++e) {
        std::uint64_t rest = e;
        for (int i = n - 1; i >= 0; --i) {
            digits_[e * n + i] = std::uint8_t(rest % base_);
            rest /= base_;
        }
    }

    event_count_ = std::size_t(sc.event_count());
    if (locals_per_party_pow_ * sc.event_count() <= (std::uint64_t{16} << 20)) {
        local_tables_.resize(locals_per_party_pow_ * sc.event_count());
        for (std::uint64_t op = 0; op < locals_per_party_pow_; ++op)
            for (std::uint64_t e = 0; e < sc.event_count(); ++e)
                local_tables_[op * sc.event_count() + e] =
                    std::uint16_t(apply_slow(op, std::uint32_t(e)));
        local_tables_size_ = std::size_t(locals_per_party_pow_);
    }
}

std::uint32_t SymmetryGroup::apply_slow(std::size_t op, std::uint32_t event) const
{
    const int n = scenario_.parties();
    const std::size_t l_count = locals_.size();
    const std::uint8_t* codes = &digits_[std::size_t(event) * n];
    const auto& perm = party_perms_[op / locals_per_party_pow_];
    std::size_t rest = op % locals_per_party_pow_;
    std::uint64_t out = 0;
    for (int i = n - 1; i >= 0; --i) {
        out += std::uint64_t(locals_[rest % l_count][codes[i]]) * place_[perm[i]];
        rest /= l_count;
    }
    return std::uint32_t(out);
}

void SymmetryGroup::decompose(std::size_t op, std::size_t& party_idx,
                              std::vector<std::uint32_t>& locals) const
{
    const int n = scenario_.parties();
    const std::size_t l_count = locals_.size();
    locals.resize(n);
    for (int i = n - 1; i >= 0; --i) {
        locals[i] = std::uint32_t(op % l_count);
        op /= l_count;
    }
    party_idx = op;
}

std::uint32_t SymmetryGroup::preimage_of_zero(std::size_t op) const
{
    const int n = scenario_.parties();
    const std::size_t l_count = locals_.size();
    std::size_t rest = op;
    std::uint64_t out = 0;
    for (int i = n - 1; i >= 0; --i) {
        out += std::uint64_t(local_preimage0_[rest % l_count]) * place_[i];
        rest /= l_count;
    }
    return std::uint32_t(out);
}

SymmetryOp SymmetryGroup::element(std::size_t op) const
{
    std::size_t party_idx = 0;
    std::vector<std::uint32_t> locals;
    decompose(op, party_idx, locals);
    const int m = scenario_.settings();
    const int d = scenario_.outcomes();
    SymmetryOp out = identity_symmetry(scenario_);
    out.party_perm = party_perms_[party_idx];
    for (int i = 0; i < scenario_.parties(); ++i) {
        const auto& table = locals_[locals[i]];
        for (int s = 0; s < m; ++s)
            for (int a = 0; a < d; ++a) {
                const std::uint8_t code = table[std::size_t(s) * d + a];
                out.setting_perms[i][s] = code / d;
                out.outcome_perms[i][s][a] = code % d;
            }
    }
    return out;
}

} // namespace lo
