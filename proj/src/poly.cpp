#include "ifield/poly.hpp"

#include <algorithm>
#include <mutex>

namespace ifield {

int Monomial::exponent_of(int gen) const {
    for (auto& [g, e] : v)
        if (g == gen) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    r.v.reserve(v.size() + o.v.size());
    size_t i = 0, j = 0;
    while (i < v.size() && j < o.v.size()) {
        if (v[i].first == o.v[j].first) {
            int e = v[i].second + o.v[j].second;
            if (e != 0) r.v.emplace_back(v[i].first, e);
            ++i, ++j;
        } else if (v[i].first < o.v[j].first) {
            r.v.push_back(v[i++]);
        } else {
            r.v.push_back(o.v[j++]);
        }
    }
    for (; i < v.size(); ++i) r.v.push_back(v[i]);
    for (; j < o.v.size(); ++j) r.v.push_back(o.v[j]);
    return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& den) const {
    Monomial q;
    size_t i = 0;
    for (auto& [g, e] : den.v) {
        while (i < v.size() && v[i].first < g) q.v.push_back(v[i++]);
        if (i == v.size() || v[i].first != g || v[i].second < e) return std::nullopt;
        if (v[i].second > e) q.v.emplace_back(g, v[i].second - e);
        ++i;
    }
    for (; i < v.size(); ++i) q.v.push_back(v[i]);
    return q;
}

Poly Poly::constant(const Rat& c) {
    Poly p;
    if (c != 0) p.t_[Monomial{}] = c;
    return p;
}

Poly Poly::gen(int g, int exp) {
    Poly p;
    if (exp == 0) return constant(1);
    Monomial m;
    m.v.emplace_back(g, exp);
    p.t_[m] = 1;
    return p;
}

bool Poly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one());
}

const Rat* Poly::constant_value() const {
    static const Rat zero(0);
    if (t_.empty()) return &zero;
    if (t_.size() == 1 && t_.begin()->first.is_one()) return &t_.begin()->second;
    return nullptr;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (auto& [m, c] : t_) r.t_[m] = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (auto& [m1, c1] : t_)
        for (auto& [m2, c2] : o.t_) r.add_term(m1.times(m2), c1 * c2);
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r;
    if (c == 0) return r;
    for (auto& [m, cc] : t_) r.t_[m] = cc * c;
    return r;
}

Poly Poly::pow(int n) const {
    if (n < 0) throw ExprError("Poly::pow negative exponent");
    Poly r = constant(1);
    Poly base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

Poly Poly::derivative_wrt_gen(int g) const {
    Poly r;
    for (auto& [m, c] : t_) {
        int e = m.exponent_of(g);
        if (e == 0) continue;
        Monomial dm;
        for (auto& [gg, ee] : m.v) {
            if (gg == g) {
                if (ee != 1) dm.v.emplace_back(gg, ee - 1);
            } else {
                dm.v.emplace_back(gg, ee);
            }
        }
        r.add_term(dm, c * e);
    }
    return r;
}

int Poly::degree_in(int g) const {
    int d = 0;
    for (auto& [m, c] : t_) d = std::max(d, m.exponent_of(g));
    return d;
}

int Poly::total_degree() const {
    int d = 0;
    for (auto& [m, c] : t_) {
        int s = 0;
        for (auto& [gg, ee] : m.v) s += ee;
        d = std::max(d, s);
    }
    return d;
}

Poly Poly::coeff_of(int g, int k) const {
    Poly r;
    for (auto& [m, c] : t_) {
        if (m.exponent_of(g) != k) continue;
        Monomial mm;
        for (auto& [gg, ee] : m.v)
            if (gg != g) mm.v.emplace_back(gg, ee);
        r.add_term(mm, c);
    }
    return r;
}

std::vector<int> Poly::generators() const {
    std::vector<int> gs;
    for (auto& [m, c] : t_)
        for (auto& [g, e] : m.v)
            if (!std::binary_search(gs.begin(), gs.end(), g)) {
                gs.insert(std::upper_bound(gs.begin(), gs.end(), g), g);
            }
    return gs;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) return std::nullopt;
    if (const Rat* c = d.constant_value()) {
        if (*c == 0) return std::nullopt;
        Poly q;
        for (auto& [m, cc] : t_) q.t_[m] = cc / *c;
        return q;
    }
    // division needs a multiplicative monomial order; use lex over a dense
    // exponent vector (map order is not multiplicative)
    std::vector<int> gs = generators();
    for (int g : d.generators())
        if (!std::binary_search(gs.begin(), gs.end(), g))
            gs.insert(std::upper_bound(gs.begin(), gs.end(), g), g);
    auto dense = [&](const Monomial& m) {
        std::vector<int> e(gs.size(), 0);
        for (auto& [g, ee] : m.v) {
            auto it = std::lower_bound(gs.begin(), gs.end(), g);
            e[size_t(it - gs.begin())] = ee;
        }
        return e;
    };
    auto lead_of = [&](const Poly& p) {
        auto best = p.t_.begin();
        auto beste = dense(best->first);
        for (auto it = std::next(p.t_.begin()); it != p.t_.end(); ++it) {
            auto e = dense(it->first);
            if (e > beste) {
                best = it;
                beste = e;
            }
        }
        return best;
    };
    auto dl = lead_of(d);
    Poly r = *this, q;
    while (!r.is_zero()) {
        auto rl = lead_of(r);
        auto qm = rl->first.divide(dl->first);
        if (!qm) return std::nullopt;
        Poly step;
        step.add_term(*qm, rl->second / dl->second);
        q += step;
        r -= step * d;
    }
    return q;
}

Rat Poly::extract_scalar() {
    if (t_.empty()) return Rat(1);
    // gcd of numerators / lcm of denominators, sign from leading coefficient
    mpz_class num_gcd = 0, den_lcm = 1;
    for (auto& [m, c] : t_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat s(num_gcd, den_lcm);
    s.canonicalize();
    if (std::prev(t_.end())->second < 0) s = -s;
    if (s == 1) return s;
    for (auto& [m, c] : t_) c /= s;
    return s;
}

Poly reduce_relations(Poly p) {
    auto& S = Symbols::instance();
    bool changed = true;
    while (changed) {
        changed = false;
        Poly out;
        for (auto& [m, c] : p.terms()) {
            int hit_gen = -1, hit_handle = -1;
            for (auto& [g, e] : m.v) {
                if (e >= 2) {
                    if (auto h = S.square_rule(g)) {
                        hit_gen = g;
                        hit_handle = *h;
                        break;
                    }
                }
            }
            if (hit_gen < 0) {
                out.add_term(m, c);
                continue;
            }
            changed = true;
            int e = m.exponent_of(hit_gen);
            Monomial rest;
            for (auto& [g, ee] : m.v)
                if (g != hit_gen) rest.v.emplace_back(g, ee);
            Poly repl = stored_poly(hit_handle).pow(e / 2);
            if (e % 2) repl = repl * Poly::gen(hit_gen, 1);
            Poly restp;
            restp.add_term(rest, c);
            out += restp * repl;
        }
        p = out;
    }
    return p;
}

int store_poly(const Poly& p) {
    return Symbols::instance().store_poly_handle(new Poly(p));
}

const Poly& stored_poly(int handle) {
    return *static_cast<const Poly*>(Symbols::instance().poly_handle(handle));
}

int intern_sqrt(const Poly& radicand) {
    static std::map<Poly, int> cache;
    static std::mutex m;
    std::lock_guard lk(m);
    auto it = cache.find(radicand);
    if (it != cache.end()) return it->second;
    int g = Symbols::instance().sqrt_gen(store_poly(radicand));
    cache[radicand] = g;
    return g;
}

}  // namespace ifield
