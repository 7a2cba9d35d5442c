#include "hwpkit/group.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <stdexcept>

namespace hwp {

namespace {

void require_same_dim(Dim a, Dim b) {
    if (a != b)
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.value()) + " vs " +
                                    std::to_string(b.value()));
}

// packing index (nu-major, then gamma, beta, alpha): doubles as the canonical
// sort order of GroupClosure element lists
std::size_t pack(const HWPElement& g) {
    const std::size_t d = static_cast<std::size_t>(g.dim().value());
    return ((static_cast<std::size_t>(g.nu) * d + g.gamma.value()) * d + g.beta.value()) * d +
           g.alpha.value();
}

HWPElement unpack(Dim d, std::size_t code) {
    const std::size_t n = static_cast<std::size_t>(d.value());
    const std::int64_t a = static_cast<std::int64_t>(code % n);
    code /= n;
    const std::int64_t b = static_cast<std::int64_t>(code % n);
    code /= n;
    const std::int64_t g = static_cast<std::int64_t>(code % n);
    code /= n;
    return hwp_element(d, a, b, g, static_cast<int>(code));
}

std::vector<HWPElement> sorted_elements(Dim d, const std::vector<char>& member) {
    std::vector<HWPElement> out;
    for (std::size_t code = 0; code < member.size(); ++code)
        if (member[code]) out.push_back(unpack(d, code));
    return out;  // ascending pack order by construction
}

}  // namespace

HWPElement hwp_element(Dim d, std::int64_t alpha, std::int64_t beta, std::int64_t gamma, int nu) {
    return {ModInt(alpha, d), ModInt(beta, d), ModInt(gamma, d), ((nu % 2) + 2) % 2};
}

HWPElement hwp_identity(Dim d) { return hwp_element(d, 0, 0, 0, 0); }

HWPElement hwp_mul(const HWPElement& g1, const HWPElement& g2) {
    require_same_dim(g1.dim(), g2.dim());
    const Dim d = g1.dim();
    const std::int64_t s = g1.nu == 0 ? 1 : -1;
    const ModInt sgn(s, d);
    const ModInt cross = g1.alpha * g2.beta - g2.alpha * g1.beta;
    return {g1.alpha + sgn * g2.alpha, g1.beta + sgn * g2.beta,
            g1.gamma + g2.gamma + two_inverse(d) * sgn * cross, (g1.nu + g2.nu) % 2};
}

HWPElement hwp_inv(const HWPElement& g) {
    const std::int64_t s = g.nu == 0 ? -1 : 1;  // (-1)^{nu+1}
    const ModInt sgn(s, g.dim());
    return {sgn * g.alpha, sgn * g.beta, -g.gamma, g.nu};
}

int hwp_order(const HWPElement& g) {
    const HWPElement id = hwp_identity(g.dim());
    HWPElement cur = g;
    int k = 1;
    while (!(cur == id)) {
        cur = hwp_mul(cur, g);
        ++k;
        if (k > 2 * g.dim().value())
            throw std::logic_error("element order exceeded 2d");  // unreachable by group law
    }
    return k;
}

HWPElement hwp_group_commutator(const HWPElement& g1, const HWPElement& g2) {
    // g1 g2 g1^{-1} g2^{-1} = (g1 g2)(g2 g1)^{-1}
    return hwp_mul(hwp_mul(g1, g2), hwp_inv(hwp_mul(g2, g1)));
}

Operator to_operator(const HWPElement& g) {
    return dp_operator(g.alpha, g.beta, g.gamma, g.nu);
}

DihedralElement dihedral_element(Dim d, std::int64_t a, int nu) {
    return {ModInt(a, d), ((nu % 2) + 2) % 2};
}

DihedralElement dihedral_mul(const DihedralElement& e1, const DihedralElement& e2) {
    require_same_dim(e1.dim(), e2.dim());
    const ModInt sgn(e1.nu == 0 ? 1 : -1, e1.dim());
    return {e1.a + sgn * e2.a, (e1.nu + e2.nu) % 2};
}

DihedralElement dihedral_inv(const DihedralElement& e) {
    const ModInt sgn(e.nu == 0 ? -1 : 1, e.dim());
    return {sgn * e.a, e.nu};
}

HWPElement embed_dihedral(const DihedralElement& e) {
    return hwp_element(e.dim(), e.a.value(), 0, 0, e.nu);
}

ModInt area_form(const ModInt& x1, int nu1, const ModInt& x2, int nu2) {
    const Dim d = x1.modulus();
    return x1 * ModInt(nu2, d) - x2 * ModInt(nu1, d);
}

LoopArea loop_area(const HWPElement& g1, const HWPElement& g2) {
    require_same_dim(g1.dim(), g2.dim());
    const Dim d = g1.dim();
    const ModInt two(2, d);
    const int lambda = (g1.nu == 0 && g2.nu == 0) ? 1 : -1;
    const ModInt cross = g1.alpha * g2.beta - g2.alpha * g1.beta;
    return {two * area_form(g1.alpha, g1.nu, g2.alpha, g2.nu),
            two * area_form(g1.beta, g1.nu, g2.beta, g2.nu),
            ModInt(lambda, d) * cross, lambda, ModInt(0, d)};
}

HWPElement commutator_hw(const HWPElement& g1, const HWPElement& g2) {
    if (g1.nu != 0 || g2.nu != 0)
        throw std::invalid_argument("commutator_hw requires nu = 0 on both elements");
    const Dim d = g1.dim();
    return {ModInt(0, d), ModInt(0, d), g1.alpha * g2.beta - g2.alpha * g1.beta, 0};
}

DihedralElement commutator_dihedral(const DihedralElement& e1, const DihedralElement& e2) {
    const Dim d = e1.dim();
    const ModInt two(2, d);
    return {two * (ModInt(e2.nu, d) * e1.a - ModInt(e1.nu, d) * e2.a), 0};
}

HWPElement commutator_hwp(const HWPElement& g1, const HWPElement& g2) {
    const LoopArea la = loop_area(g1, g2);
    return {la.A, la.B, la.Gamma, 0};
}

Phase commutator2_hwp(const HWPElement& g1, const HWPElement& g2, const HWPElement& g3,
                      const HWPElement& g4) {
    const Dim d = g1.dim();
    const ModInt four(4, d);
    const ModInt phi = four * (area_form(g1.alpha, g1.nu, g2.alpha, g2.nu) *
                                   area_form(g3.beta, g3.nu, g4.beta, g4.nu) -
                               area_form(g3.alpha, g3.nu, g4.alpha, g4.nu) *
                                   area_form(g1.beta, g1.nu, g2.beta, g2.nu));
    return Phase(phi);
}

double loop_overlap(const Ket& f, const HWPElement& g1, const HWPElement& g2) {
    if (std::abs(f.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("loop_overlap requires a unit-normalized state");
    const Operator L = to_operator(commutator_hwp(g1, g2));
    return std::abs((f.adjoint() * L * f).value());
}

bool GroupClosure::contains(const HWPElement& g) const {
    const std::size_t code = pack(g);
    auto it = std::lower_bound(elements.begin(), elements.end(), code,
                               [](const HWPElement& e, std::size_t c) { return pack(e) < c; });
    return it != elements.end() && pack(*it) == code;
}

GroupClosure close_group(Dim d, std::vector<HWPElement> generators) {
    const std::size_t total = 2 * static_cast<std::size_t>(d.value()) * d.value() * d.value();
    std::vector<char> member(total, 0);
    std::vector<HWPElement> frontier_elems;
    std::deque<HWPElement> queue;

    auto insert = [&](const HWPElement& g) {
        char& slot = member[pack(g)];
        if (!slot) {
            slot = 1;
            queue.push_back(g);
        }
    };

    insert(hwp_identity(d));
    for (const auto& g : generators) {
        require_same_dim(g.dim(), d);
        insert(g);
    }

    // breadth-first closure: new elements multiply against every generator and
    // its inverse from both sides, which saturates the generated subgroup
    std::vector<HWPElement> gens_and_invs;
    for (const auto& g : generators) {
        gens_and_invs.push_back(g);
        gens_and_invs.push_back(hwp_inv(g));
    }
    while (!queue.empty()) {
        const HWPElement g = queue.front();
        queue.pop_front();
        for (const auto& h : gens_and_invs) {
            insert(hwp_mul(g, h));
            insert(hwp_mul(h, g));
        }
        insert(hwp_inv(g));
    }

    GroupClosure out{d, sorted_elements(d, member), std::move(generators), true};
    return out;
}

GroupClosure group_from_elements(Dim d, std::vector<HWPElement> elements) {
    const std::size_t total = 2 * static_cast<std::size_t>(d.value()) * d.value() * d.value();
    std::vector<char> member(total, 0);
    for (const auto& g : elements) {
        require_same_dim(g.dim(), d);
        member[pack(g)] = 1;
    }
    std::vector<HWPElement> sorted = sorted_elements(d, member);
    bool closed = member[pack(hwp_identity(d))] != 0;
    for (const auto& g : sorted) {
        if (!closed) break;
        if (!member[pack(hwp_inv(g))]) closed = false;
        for (const auto& h : sorted)
            if (!member[pack(hwp_mul(g, h))]) {
                closed = false;
                break;
            }
    }
    return {d, std::move(sorted), {}, closed};
}

GroupClosure hwp_group(Dim d) {
    const int n = d.value();
    std::vector<HWPElement> all;
    all.reserve(2 * n * n * n);
    for (int nu = 0; nu <= 1; ++nu)
        for (int g = 0; g < n; ++g)
            for (int b = 0; b < n; ++b)
                for (int a = 0; a < n; ++a) all.push_back(hwp_element(d, a, b, g, nu));
    return {d, std::move(all), {hwp_element(d, 1, 0, 0, 0), hwp_element(d, 0, 1, 0, 0),
                                hwp_element(d, 0, 0, 1, 0), hwp_element(d, 0, 0, 0, 1)},
            true};
}

GroupClosure hw_group(Dim d) {
    const int n = d.value();
    std::vector<HWPElement> all;
    all.reserve(n * n * n);
    for (int g = 0; g < n; ++g)
        for (int b = 0; b < n; ++b)
            for (int a = 0; a < n; ++a) all.push_back(hwp_element(d, a, b, g, 0));
    return {d, std::move(all),
            {hwp_element(d, 1, 0, 0, 0), hwp_element(d, 0, 1, 0, 0), hwp_element(d, 0, 0, 1, 0)},
            true};
}

GroupClosure dihedral_group_z(Dim d) {
    std::vector<HWPElement> all;
    for (int nu = 0; nu <= 1; ++nu)
        for (int a = 0; a < d.value(); ++a) all.push_back(hwp_element(d, a, 0, 0, nu));
    std::sort(all.begin(), all.end(),
              [](const HWPElement& x, const HWPElement& y) { return pack(x) < pack(y); });
    return {d, std::move(all), {hwp_element(d, 1, 0, 0, 0), hwp_element(d, 0, 0, 0, 1)}, true};
}

GroupClosure phase_subgroup(Dim d) {
    std::vector<HWPElement> all;
    for (int g = 0; g < d.value(); ++g) all.push_back(hwp_element(d, 0, 0, g, 0));
    return {d, std::move(all), {hwp_element(d, 0, 0, 1, 0)}, true};
}

namespace {

void require_exhaustive_ok(const GroupClosure& group) {
    if (!group.closed) throw std::invalid_argument("closure not established");
    if (group.dim.value() > 9)
        throw std::domain_error("exhaustive series computation is capped at d <= 9");
}

GroupClosure commutator_subgroup(const GroupClosure& G, const GroupClosure& H) {
    std::vector<HWPElement> gens;
    const std::size_t total =
        2 * static_cast<std::size_t>(G.dim.value()) * G.dim.value() * G.dim.value();
    std::vector<char> seen(total, 0);
    for (const auto& g : G.elements)
        for (const auto& h : H.elements) {
            const HWPElement c = hwp_group_commutator(g, h);
            char& slot = seen[pack(c)];
            if (!slot) {
                slot = 1;
                gens.push_back(c);
            }
        }
    return close_group(G.dim, std::move(gens));
}

}  // namespace

std::vector<GroupClosure> derived_series(const GroupClosure& group) {
    require_exhaustive_ok(group);
    std::vector<GroupClosure> series{group};
    while (series.back().size() > 1) {
        GroupClosure next = commutator_subgroup(series.back(), series.back());
        if (next.size() == series.back().size())
            throw std::logic_error("derived series stalled; group is not solvable");
        series.push_back(std::move(next));
    }
    return series;
}

std::vector<std::size_t> derived_series_sizes(const GroupClosure& group) {
    std::vector<std::size_t> sizes;
    for (const auto& g : derived_series(group)) sizes.push_back(g.size());
    return sizes;
}

LowerCentralResult lower_central_series(const GroupClosure& group) {
    require_exhaustive_ok(group);
    LowerCentralResult res;
    res.series.push_back(group);
    while (true) {
        GroupClosure next = commutator_subgroup(group, res.series.back());
        const std::size_t sz = next.size();
        const std::size_t prev = res.series.back().size();
        res.series.push_back(std::move(next));
        if (sz == 1) {
            res.nilpotent = true;
            res.stable_size = 1;
            return res;
        }
        if (sz == prev) {
            res.nilpotent = false;
            res.stable_size = sz;
            return res;
        }
    }
}

SemidirectReport semidirect_checks(Dim d, bool corrupt_table) {
    if (d.value() > 9)
        throw std::domain_error("exhaustive series computation is capped at d <= 9");
    SemidirectReport rep;
    const GroupClosure HWP = hwp_group(d);
    const GroupClosure HW = hw_group(d);
    const HWPElement id = hwp_identity(d);
    const HWPElement par = hwp_element(d, 0, 0, 0, 1);

    // The normality check runs off an explicit conjugation table so a fault
    // can be injected into the table itself (test hook).
    bool normal = true;
    bool first = true;
    for (const auto& g : HWP.elements) {
        for (const auto& h : HW.elements) {
            HWPElement conj = hwp_mul(hwp_mul(g, h), hwp_inv(g));
            if (corrupt_table && first) {
                conj = hwp_mul(conj, par);  // damaged table entry leaves the subgroup
                first = false;
            }
            if (!HW.contains(conj)) {
                normal = false;
                break;
            }
        }
        if (!normal) break;
    }
    rep.hw_normal = normal;

    rep.parity_z2 = hwp_mul(par, par) == id && !(par == id);

    bool unique = true;
    for (const auto& g : HWP.elements) {
        const HWPElement ppart = hwp_element(d, 0, 0, 0, g.nu);
        const HWPElement hpart = hwp_mul(g, hwp_inv(ppart));
        if (hpart.nu != 0 || !(hwp_mul(hpart, ppart) == g)) {
            unique = false;
            break;
        }
    }
    rep.unique_factorization = unique;

    rep.trivial_intersection = HW.contains(id) && !HW.contains(par);

    // same structure for the dihedral group Z(d) x| Z(2)
    bool dihedral_ok = true;
    std::vector<DihedralElement> delta;
    for (int nu = 0; nu <= 1; ++nu)
        for (int a = 0; a < d.value(); ++a) delta.push_back(dihedral_element(d, a, nu));
    for (const auto& e : delta) {
        for (const auto& r : delta) {
            if (r.nu != 0) continue;
            const DihedralElement conj = dihedral_mul(dihedral_mul(e, r), dihedral_inv(e));
            if (conj.nu != 0) dihedral_ok = false;
        }
        const DihedralElement refl = dihedral_element(d, 0, e.nu);
        const DihedralElement rot = dihedral_mul(e, dihedral_inv(refl));
        if (rot.nu != 0 || !(dihedral_mul(rot, refl) == e)) dihedral_ok = false;
    }
    const DihedralElement dpar = dihedral_element(d, 0, 1);
    if (!(dihedral_mul(dpar, dpar) == dihedral_element(d, 0, 0))) dihedral_ok = false;
    rep.dihedral_analog = dihedral_ok;

    return rep;
}

}  // namespace hwp
