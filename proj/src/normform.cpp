#include "ntlab/normform.hpp"

#include <functional>

namespace ntlab {

std::string GaussRat::str() const {
    if (im == 0) return re.get_str();
    if (re == 0) return im.get_str() + "i";
    return re.get_str() + (im > 0 ? "+" : "") + im.get_str() + "i";
}

namespace {

template <typename T>
T cubic_norm(const T& a, const T& b, const T& c) {
    return a * a * a - b * b * b - c * c * c - a * b * b * 3 - a * c * c * 3 + a * b * c * 3 +
           b * b * c * 6 - b * c * c * 3;
}

template <>
GaussRat cubic_norm(const GaussRat& a, const GaussRat& b, const GaussRat& c) {
    auto k = [](long v) { return GaussRat{Rat(v), Rat(0)}; };
    return a * a * a - b * b * b - c * c * c - a * b * b * k(3) - a * c * c * k(3) +
           a * b * c * k(3) + b * b * c * k(6) - b * c * c * k(3);
}

}  // namespace

Int NormForm::eval(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != arity()) throw std::invalid_argument("NormForm arity");
    if (kind == FormKind::CubicField) return cubic_norm(v[0], v[1], v[2]);
    return v[0] * v[0] + v[1] * v[1];
}

GaussRat NormForm::eval(const std::vector<GaussRat>& v) const {
    if (static_cast<int>(v.size()) != arity()) throw std::invalid_argument("NormForm arity");
    if (kind == FormKind::CubicField) return cubic_norm(v[0], v[1], v[2]);
    return v[0] * v[0] + v[1] * v[1];
}

CandidateMap CandidateMap::from_table(std::map<Int, GaussRat> t, long bound) {
    CandidateMap m;
    m.kind = Kind::Table;
    m.bound = bound;
    m.table = std::move(t);
    return m;
}

bool CandidateMap::defined_at(const Int& n) const {
    switch (kind) {
        case Kind::Table: return table.count(n) > 0;
        default: return true;
    }
}

GaussRat CandidateMap::eval(const Int& n) const {
    switch (kind) {
        case Kind::Identity: return GaussRat::integer(n);
        case Kind::Negate: return GaussRat::integer(-n);
        case Kind::Constant: return constant;
        case Kind::Table: {
            auto it = table.find(n);
            if (it == table.end()) throw HUndefinedAt(n);
            return it->second;
        }
    }
    throw std::logic_error("unreachable");
}

std::string CandidateMap::str() const {
    switch (kind) {
        case Kind::Identity: return "n -> n";
        case Kind::Negate: return "n -> -n";
        case Kind::Constant: return "n -> " + constant.str();
        case Kind::Table: {
            std::string s = "table{";
            bool first = true;
            for (const auto& [k, v] : table) {
                if (!first) s += ", ";
                first = false;
                s += k.get_str() + "->" + v.str();
            }
            return s + "}";
        }
    }
    return "?";
}

namespace {

/// Iterate all tuples in [-B, B]^arity.
void for_each_tuple(int arity, long B, const std::function<bool(const std::vector<Int>&)>& fn) {
    std::vector<Int> t(arity, Int(-B));
    std::vector<long> raw(arity, -B);
    while (true) {
        for (int i = 0; i < arity; ++i) t[i] = raw[i];
        if (!fn(t)) return;
        int pos = arity - 1;
        while (pos >= 0 && raw[pos] == B) {
            raw[pos] = -B;
            --pos;
        }
        if (pos < 0) return;
        ++raw[pos];
    }
}

}  // namespace

Verdict verify_pair(const NormForm& form, const CandidateMap& f, const CandidateMap& h, long B) {
    Verdict v;
    for_each_tuple(form.arity(), B, [&](const std::vector<Int>& t) {
        std::vector<GaussRat> ft;
        ft.reserve(t.size());
        for (const auto& n : t) ft.push_back(f.eval(n));
        Int norm = form.eval(t);
        if (!h.defined_at(norm)) throw HUndefinedAt(norm);
        if (!(form.eval(ft) == h.eval(norm))) {
            v.ok = false;
            v.counterexample = t;
            return false;
        }
        return true;
    });
    return v;
}

Verdict verify_dependence(const NormForm& form, const CandidateMap& f, long B) {
    Verdict v;
    std::map<Int, GaussRat> cls;
    for_each_tuple(form.arity(), B, [&](const std::vector<Int>& t) {
        std::vector<GaussRat> ft;
        ft.reserve(t.size());
        for (const auto& n : t) ft.push_back(f.eval(n));
        Int norm = form.eval(t);
        GaussRat val = form.eval(ft);
        auto [it, fresh] = cls.emplace(norm, val);
        if (!fresh && !(it->second == val)) {
            v.ok = false;
            v.counterexample = t;
            return false;
        }
        return true;
    });
    return v;
}

std::vector<GaussRat> signed_scaling_values(long B) {
    std::vector<GaussRat> vs;
    vs.push_back(GaussRat());
    for (long a = 1; a <= B; ++a) {
        vs.push_back({Rat(a), Rat(0)});
        vs.push_back({Rat(-a), Rat(0)});
        vs.push_back({Rat(0), Rat(a)});
        vs.push_back({Rat(0), Rat(-a)});
    }
    return vs;
}

namespace {

struct Searcher {
    const NormForm& form;
    const std::vector<GaussRat>& values;
    long B;
    SearchMode mode;
    uint64_t cap;
    uint64_t nodes = 0;

    // variables in assignment order 0, 1, -1, 2, -2, ...
    std::vector<long> var_order;
    std::vector<int> order_of;  // index by n + B
    std::vector<int> assigned;  // value index per variable order slot, -1 if none

    // tuples grouped by the last-assigned variable slot
    struct TupleInfo {
        std::vector<long> entries;  // raw integers
        Int norm;
    };
    std::vector<std::vector<TupleInfo>> tuples_by_slot;

    // class value per norm, with trail for backtracking
    std::map<Int, std::pair<GaussRat, bool>> cls;  // value, set?
    std::vector<Int> trail;

    std::vector<CandidateMap> found;

    explicit Searcher(const NormForm& f, const std::vector<GaussRat>& vs, long b, SearchMode m,
                      uint64_t c)
        : form(f), values(vs), B(b), mode(m), cap(c) {
        var_order.push_back(0);
        for (long k = 1; k <= B; ++k) {
            var_order.push_back(k);
            var_order.push_back(-k);
        }
        order_of.assign(2 * B + 1, 0);
        for (std::size_t i = 0; i < var_order.size(); ++i) order_of[var_order[i] + B] = i;
        assigned.assign(var_order.size(), -1);

        tuples_by_slot.resize(var_order.size());
        std::vector<long> raw(form.arity(), -B);
        std::vector<Int> t(form.arity());
        while (true) {
            int last = 0;
            for (int i = 0; i < form.arity(); ++i) {
                t[i] = raw[i];
                last = std::max(last, order_of[raw[i] + B]);
            }
            tuples_by_slot[last].push_back({raw, form.eval(t)});
            int pos = form.arity() - 1;
            while (pos >= 0 && raw[pos] == B) {
                raw[pos] = -B;
                --pos;
            }
            if (pos < 0) break;
            ++raw[pos];
        }
    }

    GaussRat value_of(long n) const { return values[assigned[order_of[n + B]]]; }

    bool check_slot(int slot, std::size_t trail_mark) {
        for (const TupleInfo& tp : tuples_by_slot[slot]) {
            std::vector<GaussRat> ft;
            ft.reserve(tp.entries.size());
            for (long n : tp.entries) ft.push_back(value_of(n));
            GaussRat val = form.eval(ft);
            auto it = cls.find(tp.norm);
            if (it == cls.end() || !it->second.second) {
                cls[tp.norm] = {val, true};
                trail.push_back(tp.norm);
                // f == h consistency: if the norm lies in the domain and is
                // already assigned, the class value must match f there
                if (mode == SearchMode::FEqualsH && abs(tp.norm) <= B) {
                    long nv = tp.norm.get_si();
                    int slot2 = order_of[nv + B];
                    if (assigned[slot2] >= 0 && !(values[assigned[slot2]] == val)) return false;
                }
            } else if (!(it->second.first == val)) {
                return false;
            }
        }
        (void)trail_mark;
        return true;
    }

    /// After assigning `slot`, recheck h-consistency for classes whose norm
    /// equals this variable.
    bool check_h_consistency(int slot) {
        if (mode != SearchMode::FEqualsH) return true;
        long n = var_order[slot];
        auto it = cls.find(Int(n));
        if (it != cls.end() && it->second.second)
            return values[assigned[slot]] == it->second.first;
        return true;
    }

    void run(int slot) {
        if (++nodes > cap) throw SearchSpaceTooLarge();
        if (slot == static_cast<int>(var_order.size())) {
            std::map<Int, GaussRat> table;
            for (std::size_t i = 0; i < var_order.size(); ++i)
                table[Int(var_order[i])] = values[assigned[i]];
            found.push_back(CandidateMap::from_table(std::move(table), B));
            return;
        }
        for (std::size_t vi = 0; vi < values.size(); ++vi) {
            assigned[slot] = static_cast<int>(vi);
            std::size_t mark = trail.size();
            if (check_h_consistency(slot) && check_slot(slot, mark)) run(slot + 1);
            while (trail.size() > mark) {
                cls[trail.back()].second = false;
                trail.pop_back();
            }
            assigned[slot] = -1;
        }
    }
};

}  // namespace

std::vector<CandidateMap> search_solutions(const NormForm& form,
                                           const std::vector<GaussRat>& value_set, long B,
                                           SearchMode mode, uint64_t node_cap) {
    Searcher s(form, value_set, B, mode, node_cap);
    s.run(0);
    return s.found;
}

}  // namespace ntlab
