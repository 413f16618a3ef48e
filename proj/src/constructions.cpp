#include "automata/constructions.hpp"

#include "automata/errors.hpp"

#include <map>
#include <string>

namespace automata {

namespace {

/// Allocates states by label so transition lists read like the written
/// constructions.
class StateTable {
public:
    State add(const std::string& label)
    {
        auto [it, inserted] = index_.emplace(label, static_cast<State>(labels_.size()));
        if (!inserted) throw std::logic_error("duplicate state label " + label);
        labels_.push_back(label);
        return it->second;
    }
    State operator[](const std::string& label) const
    {
        auto it = index_.find(label);
        if (it == index_.end()) throw std::logic_error("unknown state label " + label);
        return it->second;
    }
    std::size_t size() const { return labels_.size(); }
    std::vector<std::string> labels() const { return labels_; }

private:
    std::map<std::string, State> index_;
    std::vector<std::string> labels_;
};

std::string bit(unsigned i, unsigned x) { return std::to_string(i) + "_" + std::to_string(x); }
std::string allone(unsigned i, unsigned x) { return bit(i, x) + ",allone"; }
std::string exzero(unsigned i, unsigned x) { return bit(i, x) + ",exzero"; }
std::string exzero(unsigned i) { return std::to_string(i) + "_exzero"; }
std::string primed(unsigned i, unsigned x, unsigned primes)
{
    return std::to_string(i) + std::string(primes, '\'') + "_" + std::to_string(x);
}

std::uint64_t power_of_two(unsigned e)
{
    if (e >= 63) throw ResourceCapExceeded("2^" + std::to_string(e) + " does not fit the counter width");
    return std::uint64_t{1} << e;
}

struct AfaParts {
    StateTable states;
    std::vector<NfaTransition> transitions;
    std::vector<State> accepting;
    std::vector<State> existential;
};

// The realtime machine, or (padded = true) its variant in which every read
// is followed by exactly three epsilon moves.
AfaParts evenodd_afa_parts(unsigned k, bool padded)
{
    AfaParts m;
    auto& S = m.states;
    const char a = 'a';
    const MaybeSymbol eps = std::nullopt;

    S.add("s_ini");
    for (unsigned i = k + 1; i-- > 0;)
        for (unsigned x = 0; x < 2; ++x) S.add(bit(i, x));
    for (unsigned i = k; i >= 1; --i)
        for (unsigned x = 0; x < 2; ++x) S.add(allone(i, x));
    for (unsigned i = k; i >= 1; --i)
        for (unsigned x = 0; x < 2; ++x) S.add(exzero(i, x));
    for (unsigned i = k; i >= 2; --i) S.add(exzero(i));
    if (padded) {
        for (unsigned i = k + 1; i-- > 0;)
            for (unsigned x = 0; x < 2; ++x) {
                S.add(primed(i, x, 1));
                S.add(primed(i, x, 2));
            }
        for (unsigned x = 0; x < 2; ++x) S.add(primed(0, x, 3));
    }

    // Entry point into i_x after an epsilon step: i''_x when padded.
    auto delayed = [&](unsigned i, unsigned x, unsigned primes) {
        return padded ? S[primed(i, x, primes)] : S[bit(i, x)];
    };
    auto add = [&](State from, MaybeSymbol sym, State to) { m.transitions.push_back({from, sym, to}); };

    for (unsigned i = k; i >= 1; --i)
        for (unsigned x = 0; x < 2; ++x) {
            add(S[bit(i, x)], a, S[exzero(i, x)]);
            add(S[bit(i, x)], a, S[allone(i, 1 - x)]);
        }
    for (unsigned x = 0; x < 2; ++x)
        add(S[bit(0, x)], a, padded ? S[primed(0, 1 - x, 3)] : S[bit(0, 1 - x)]);
    for (unsigned i = k; i >= 1; --i)
        for (unsigned x = 0; x < 2; ++x) {
            add(S[allone(i, x)], eps, delayed(i, x, 2));
            for (unsigned j = 0; j < i; ++j) add(S[allone(i, x)], eps, delayed(j, 1, 2));
        }
    for (unsigned i = k; i >= 2; --i)
        for (unsigned x = 0; x < 2; ++x) {
            add(S[exzero(i, x)], eps, delayed(i, x, 2));
            add(S[exzero(i, x)], eps, S[exzero(i)]);
        }
    if (k >= 1)
        for (unsigned x = 0; x < 2; ++x) {
            add(S[exzero(1, x)], eps, delayed(1, x, 2));
            add(S[exzero(1, x)], eps, delayed(0, 0, 2));
        }
    for (unsigned i = k; i >= 2; --i)
        for (unsigned j = 0; j < i; ++j) add(S[exzero(i)], eps, delayed(j, 0, 1));
    add(S["s_ini"], a, S[allone(k, 1)]);
    if (padded) {
        for (unsigned i = k + 1; i-- > 0;)
            for (unsigned x = 0; x < 2; ++x) {
                add(S[primed(i, x, 2)], eps, S[primed(i, x, 1)]);
                add(S[primed(i, x, 1)], eps, S[bit(i, x)]);
            }
        for (unsigned x = 0; x < 2; ++x) add(S[primed(0, x, 3)], eps, S[primed(0, x, 2)]);
    }

    m.accepting.push_back(S["s_ini"]);
    for (unsigned i = 0; i <= k; ++i) m.accepting.push_back(S[bit(i, 0)]);
    for (unsigned i = 0; i <= k; ++i)
        for (unsigned x = 0; x < 2; ++x) m.existential.push_back(S[bit(i, x)]);
    for (unsigned i = k; i >= 2; --i) m.existential.push_back(S[exzero(i)]);
    if (padded) {
        // single-successor delay states; the quantifier is immaterial
        for (unsigned i = 0; i <= k; ++i)
            for (unsigned x = 0; x < 2; ++x) {
                m.existential.push_back(S[primed(i, x, 1)]);
                m.existential.push_back(S[primed(i, x, 2)]);
            }
        for (unsigned x = 0; x < 2; ++x) m.existential.push_back(S[primed(0, x, 3)]);
    }
    return m;
}

}  // namespace

// ------------------------------------------------------------------ EvenOdd

PromiseProblem evenodd_problem(EvenOddParams params)
{
    if (params.k < 1) throw ParameterError("EvenOdd requires k >= 1");
    const std::uint64_t block = power_of_two(params.k);
    return unary_problem(
        "evenodd(" + std::to_string(params.k) + ")", 'a',
        [block](std::size_t len) { return len % (2 * block) == 0; },
        [block](std::size_t len) { return len % block == 0 && (len / block) % 2 == 1; });
}

OneWayDfa evenodd_dfa(EvenOddParams params, const Caps& caps)
{
    if (params.k < 1) throw ParameterError("EvenOdd requires k >= 1");
    const std::uint64_t period = power_of_two(params.k + 1);
    if (period > caps.max_states)
        throw ResourceCapExceeded("evenodd_dfa: 2^(k+1) = " + std::to_string(period) + " exceeds the state cap");
    std::vector<DfaTransition> transitions;
    std::vector<std::string> labels;
    for (std::uint64_t c = 0; c < period; ++c) {
        transitions.push_back({static_cast<State>(c), 'a', static_cast<State>((c + 1) % period)});
        labels.push_back("c" + std::to_string(c));
    }
    return OneWayDfa(period, Alphabet{'a'}, 0, std::move(transitions), {0}, std::move(labels));
}

OneWayAfa evenodd_afa_rt(EvenOddParams params)
{
    if (params.k < 1) throw ParameterError("EvenOdd requires k >= 1");
    auto parts = evenodd_afa_parts(params.k, false);
    return OneWayAfa(parts.states.size(), Alphabet{'a'}, parts.states["s_ini"], std::move(parts.transitions),
                     std::move(parts.accepting), std::move(parts.existential), 2, parts.states.labels());
}

OneWayAfa evenodd_afa_epsfree(EvenOddParams params)
{
    if (params.k < 3) throw ParameterError("the epsilon-free EvenOdd machine requires k >= 3");
    auto parts = evenodd_afa_parts(params.k - 2, true);
    for (auto& t : parts.transitions)
        if (!t.symbol) t.symbol = 'a';
    return OneWayAfa(parts.states.size(), Alphabet{'a'}, parts.states["s_ini"], std::move(parts.transitions),
                     std::move(parts.accepting), std::move(parts.existential), 0, parts.states.labels());
}

// ------------------------------------------------------------------ TRIOS

namespace {

void check_trios(TriosParams p)
{
    if (p.n < 1 || p.r < 1) throw ParameterError("TRIOS requires n >= 1 and r >= 1");
}

bool has_smaller_bit(std::string_view lhs, std::string_view rhs)
{
    for (std::size_t j = 0; j < lhs.size(); ++j)
        if (lhs[j] == '0' && rhs[j] == '1') return true;
    return false;
}

bool bits_only(std::string_view s)
{
    return s.find_first_not_of("01") == std::string_view::npos;
}

// Splits a word into r segments #xuv; empty result on shape mismatch.
std::vector<std::array<std::string_view, 3>> trios_segments(std::string_view w, TriosParams p)
{
    const std::size_t seg = 3 * std::size_t{p.n} + 1;
    if (w.size() != seg * p.r) return {};
    std::vector<std::array<std::string_view, 3>> out;
    for (std::size_t i = 0; i < p.r; ++i) {
        auto s = w.substr(i * seg, seg);
        if (s[0] != '#' || !bits_only(s.substr(1))) return {};
        out.push_back({s.substr(1, p.n), s.substr(1 + p.n, p.n), s.substr(1 + 2 * p.n, p.n)});
    }
    return out;
}

std::string bits_of(std::uint64_t value, unsigned n)
{
    std::string s(n, '0');
    for (unsigned j = 0; j < n; ++j)
        if (value >> (n - 1 - j) & 1) s[j] = '1';
    return s;
}

}  // namespace

PromiseProblem trios_problem(TriosParams params, const Caps& caps)
{
    check_trios(params);
    auto yes = [params](std::string_view w) {
        auto segs = trios_segments(w, params);
        if (segs.empty()) return false;
        for (auto [x, u, v] : segs)
            if (u != x || !has_smaller_bit(x, v)) return false;
        return true;
    };
    auto no = [params](std::string_view w) {
        auto segs = trios_segments(w, params);
        if (segs.empty()) return false;
        for (auto [x, u, v] : segs)
            if (v != x || !has_smaller_bit(u, x)) return false;
        return true;
    };
    auto enumerate = [params, caps](std::size_t max_length) {
        std::vector<Instance> out;
        const std::size_t length = (3 * std::size_t{params.n} + 1) * params.r;
        if (length > max_length) return out;
        if (params.n > 20) throw ResourceCapExceeded("trios enumeration: n too large");
        // ordered pairs (x, y) with some x_j < y_j
        std::vector<std::pair<std::string, std::string>> pairs;
        const std::uint64_t blocks = std::uint64_t{1} << params.n;
        for (std::uint64_t x = 0; x < blocks; ++x)
            for (std::uint64_t y = 0; y < blocks; ++y)
                if ((~x & y) != 0) pairs.emplace_back(bits_of(x, params.n), bits_of(y, params.n));
        double total = 1;
        for (unsigned i = 0; i < params.r; ++i) total *= static_cast<double>(pairs.size());
        if (2 * total > static_cast<double>(caps.max_instances))
            throw ResourceCapExceeded("trios enumeration exceeds the instance cap");
        std::vector<std::size_t> digits(params.r, 0);
        for (;;) {
            std::string yes_word, no_word;
            for (std::size_t d : digits) {
                const auto& [x, y] = pairs[d];
                yes_word += "#" + x + x + y;
                // no-segments are #x'y'x' with x'_j > y'_j, i.e. (x', y') = (y, x)
                no_word += "#" + y + x + y;
            }
            out.push_back({std::move(yes_word), Classification::yes});
            out.push_back({std::move(no_word), Classification::no});
            std::size_t i = params.r;
            while (i > 0 && ++digits[i - 1] == pairs.size()) digits[--i] = 0;
            if (i == 0) break;
        }
        return out;
    };
    return PromiseProblem("trios(" + std::to_string(params.n) + "," + std::to_string(params.r) + ")",
                          Alphabet{'#', '0', '1'}, yes, no, enumerate);
}

std::vector<Rational> trios_ladder(unsigned n)
{
    if (n < 1) throw ParameterError("TRIOS requires n >= 1");
    std::vector<Rational> ladder;
    Rational stay(1);  // p'_1 * ... * p'_{j-1}
    for (unsigned j = 1; j <= n; ++j) {
        Rational p = Rational(1, n) / stay;
        p.canonicalize();
        ladder.push_back(p);
        stay *= 1 - p;
    }
    return ladder;
}

LasVegasPfa trios_lasvegas_pfa(TriosParams params)
{
    check_trios(params);
    return trios_lasvegas_pfa(params.n);
}

LasVegasPfa trios_lasvegas_pfa(unsigned n)
{
    if (n < 1) throw ParameterError("TRIOS requires n >= 1");
    StateTable S;
    S.add("q_ini");
    S.add("q_acc");
    S.add("q_rej");
    for (unsigned j = 1; j <= n; ++j) S.add("s_" + std::to_string(j));
    for (unsigned j = 1; j <= 2 * n; ++j) S.add("t_" + std::to_string(j) + ",0");
    for (unsigned j = 1; j <= n; ++j) S.add("t_" + std::to_string(j) + ",1");
    auto s = [&](unsigned j) { return S["s_" + std::to_string(j)]; };
    auto t = [&](unsigned j, unsigned b) { return S["t_" + std::to_string(j) + "," + std::to_string(b)]; };

    std::vector<PfaTransition> tr;
    const Rational one(1);
    auto det = [&](State from, char sym, State to) { tr.push_back({from, sym, to, one}); };

    det(S["q_ini"], '0', S["q_ini"]);
    det(S["q_ini"], '1', S["q_ini"]);
    det(S["q_ini"], '#', s(1));
    const auto ladder = trios_ladder(n);
    for (unsigned j = 1; j <= n; ++j)
        for (char b : {'0', '1'}) {
            const Rational& p = ladder[j - 1];
            tr.push_back({s(j), b, t(1, static_cast<unsigned>(b - '0')), p});
            if (p != 1) tr.push_back({s(j), b, s(j + 1), 1 - p});
        }
    for (unsigned j = 1; j < 2 * n; ++j)
        for (char b : {'0', '1'}) det(t(j, 0), b, t(j + 1, 0));
    det(t(2 * n, 0), '1', S["q_acc"]);
    det(t(2 * n, 0), '0', S["q_ini"]);
    for (unsigned j = 1; j < n; ++j)
        for (char b : {'0', '1'}) det(t(j, 1), b, t(j + 1, 1));
    det(t(n, 1), '0', S["q_rej"]);
    det(t(n, 1), '1', S["q_ini"]);
    for (char c : {'#', '0', '1'}) {
        det(S["q_acc"], c, S["q_acc"]);
        det(S["q_rej"], c, S["q_rej"]);
    }

    std::vector<StateRole> roles(S.size(), StateRole::neutral);
    roles[S["q_acc"]] = StateRole::accepting;
    roles[S["q_rej"]] = StateRole::rejecting;
    return LasVegasPfa(S.size(), Alphabet{'#', '0', '1'}, S["q_ini"], std::move(tr), std::move(roles), S.labels());
}

std::size_t trios_dfa_state_count(unsigned n)
{
    return 3 * (std::size_t{1} << n) + 2 * std::size_t{n} - 2;
}

OneWayDfa trios_dfa(TriosParams params, const Caps& caps)
{
    check_trios(params);
    const unsigned n = params.n;
    if (n > 40 || trios_dfa_state_count(n) > caps.max_states)
        throw ResourceCapExceeded("trios_dfa: 2^n-scale state space exceeds the state cap");

    StateTable S;
    std::vector<DfaTransition> tr;
    S.add("start");
    // x-trie: prefix of x read so far
    auto trie = [](const std::string& prefix) { return "x:" + prefix; };
    // remaining suffix of x still to be matched by u
    auto rest = [](const std::string& suffix) { return "u:" + suffix; };
    auto vstate = [](unsigned read, bool seen_one) {
        return "v:" + std::to_string(read) + (seen_one ? ",1" : ",0");
    };

    std::vector<std::string> level{""};
    S.add(trie(""));
    for (unsigned len = 0; len < n; ++len) {
        std::vector<std::string> next_level;
        for (const auto& prefix : level)
            for (char b : {'0', '1'}) {
                std::string child = prefix + b;
                S.add(len + 1 == n ? rest(child) : trie(child));
                tr.push_back({S[trie(prefix)], b, S[len + 1 == n ? rest(child) : trie(child)]});
                next_level.push_back(child);
            }
        level = std::move(next_level);
    }
    // rest(s) for 0 <= |s| < n; rest("") doubles as v:0,0
    for (unsigned len = n; len-- > 0;) {
        std::uint64_t count = std::uint64_t{1} << len;
        for (std::uint64_t v = 0; v < count; ++v) S.add(rest(bits_of(v, len)));
    }
    for (unsigned len = n; len >= 1; --len) {
        std::uint64_t count = std::uint64_t{1} << len;
        for (std::uint64_t v = 0; v < count; ++v) {
            std::string s = bits_of(v, len);
            tr.push_back({S[rest(s)], s[0], S[rest(s.substr(1))]});
        }
    }
    for (unsigned read = 1; read < n; ++read)
        for (bool seen : {false, true}) S.add(vstate(read, seen));
    S.add("done");
    auto v_at = [&](unsigned read, bool seen) {
        if (read == n) return seen ? S["done"] : static_cast<State>(-1);
        if (read == 0) return S[rest("")];
        return S[vstate(read, seen)];
    };
    for (unsigned read = 0; read < n; ++read)
        for (bool seen : {false, true}) {
            if (read == 0 && seen) continue;
            State from = v_at(read, seen);
            tr.push_back({from, '1', v_at(read + 1, true)});
            if (State to = v_at(read + 1, seen); to != static_cast<State>(-1)) tr.push_back({from, '0', to});
        }
    tr.push_back({S["start"], '#', S[trie("")]});
    tr.push_back({S["done"], '#', S[trie("")]});
    (void)params.r;
    return OneWayDfa(S.size(), Alphabet{'#', '0', '1'}, S["start"], std::move(tr), {S["done"]}, S.labels());
}

TwoWayMachine trios_twoway_dfa(TriosParams params)
{
    check_trios(params);
    const unsigned n = params.n;
    StateTable S;
    std::vector<TwoWayTransition> tr;
    const auto L = HeadMove::left, R = HeadMove::right, Stay = HeadMove::stay;
    const char bits[] = {'0', '1'};

    S.add("seek");
    S.add("pick");
    S.add("cmp_0");
    S.add("cmp_1");
    S.add("p2pick");
    S.add("p2check");
    S.add("acc");

    // A chain of `moves` head moves in direction `dir` over bits, ending in
    // `target`. The first move is made by the caller's transition; returns
    // the state that caller should enter.
    auto chain = [&](const std::string& name, unsigned moves, HeadMove dir, State target) -> State {
        if (moves <= 1) return target;
        State next = target;
        for (unsigned k = 1; k < moves; ++k) {
            State here = S.add(name + std::to_string(k));
            for (char b : bits) tr.push_back({here, TapeSymbol::of(b), next, dir});
            next = here;
        }
        return next;
    };

    const State seek = S["seek"], pick = S["pick"], p2pick = S["p2pick"], p2check = S["p2check"];

    // seek: walk right to the next '#', accept at -|
    tr.push_back({seek, TapeSymbol::left_end(), seek, R});
    for (char b : bits) tr.push_back({seek, TapeSymbol::of(b), seek, R});
    tr.push_back({seek, TapeSymbol::right_end(), S["acc"], Stay});
    // from '#', 2n moves right to u_n
    tr.push_back({seek, TapeSymbol::of('#'), chain("fwd", 2 * n, R, pick), R});

    // pick: carry bit b n positions left, arriving in cmp_b
    for (unsigned b = 0; b < 2; ++b) {
        State cmp = S["cmp_" + std::to_string(b)];
        tr.push_back({pick, TapeSymbol::of(bits[b]), chain("back" + std::to_string(b) + "_", n, L, cmp), L});
    }
    // cmp_b: on a match go n-1 right to the next u bit; '#' ends phase one
    State to_next_u = chain("adv", n - 1, R, pick);
    State to_u1 = chain("p2fwd", n + 1, R, p2pick);
    for (unsigned b = 0; b < 2; ++b) {
        State cmp = S["cmp_" + std::to_string(b)];
        tr.push_back({cmp, TapeSymbol::of(bits[b]), to_next_u, n == 1 ? Stay : R});
        tr.push_back({cmp, TapeSymbol::of('#'), to_u1, R});
    }
    // phase two: ascending j, look for u_j = 0 with v_j = 1
    tr.push_back({p2pick, TapeSymbol::of('0'), chain("carry", n, R, p2check), R});
    tr.push_back({p2pick, TapeSymbol::of('1'), p2pick, R});
    tr.push_back({p2check, TapeSymbol::of('1'), seek, R});
    tr.push_back({p2check, TapeSymbol::of('0'), chain("ret", n - 1, L, p2pick), n == 1 ? Stay : L});

    (void)params.r;
    return TwoWayMachine(S.size(), Alphabet{'#', '0', '1'}, seek, std::move(tr), {S["acc"]}, true, S.labels());
}

// ------------------------------------------------------------------ UP(p)

namespace {

void check_probability(const Rational& p)
{
    if (p <= 0 || p >= 1) throw ParameterError("UP(p) requires 0 < p < 1, got " + to_string(p));
}

const Rational three_quarters(3, 4);
const Rational one_quarter(1, 4);

}  // namespace

PromiseProblem up_problem(const Rational& p)
{
    check_probability(p);
    auto yes_len = [p](std::size_t j) { return pow(p, j) >= three_quarters; };
    auto no_len = [p](std::size_t j) { return pow(p, j) <= one_quarter; };
    auto problem = unary_problem("up(" + to_string(p) + ")", 'a', yes_len, no_len);
    // incremental powers instead of one exponentiation per length
    auto enumerate = [p](std::size_t max_length) {
        std::vector<Instance> out;
        Rational power(1);
        for (std::size_t j = 0; j <= max_length; ++j) {
            if (power >= three_quarters)
                out.push_back({std::string(j, 'a'), Classification::yes});
            else if (power <= one_quarter)
                out.push_back({std::string(j, 'a'), Classification::no});
            power *= p;
        }
        return out;
    };
    return PromiseProblem(problem.name(), problem.alphabet(),
                          [problem](std::string_view w) { return problem.is_yes(w); },
                          [problem](std::string_view w) { return problem.is_no(w); }, enumerate);
}

OneWayPfa up_pfa(const Rational& p)
{
    check_probability(p);
    std::vector<PfaTransition> tr{{0, 'a', 0, p}, {0, 'a', 1, 1 - p}, {1, 'a', 1, Rational(1)}};
    return OneWayPfa(2, Alphabet{'a'}, 0, std::move(tr), {StateRole::accepting, StateRole::rejecting},
                     {"s_ini", "s_rej"});
}

CriticalLengths critical_lengths(const Rational& p, const Caps& caps)
{
    check_probability(p);
    CriticalLengths out{0, 0};
    Rational power(1);
    std::uint64_t j = 0;
    while (power * p >= three_quarters) {
        power *= p;
        if (++j > caps.max_critical_length)
            throw ResourceCapExceeded("critical_lengths: A_p exceeds the cap of " +
                                      std::to_string(caps.max_critical_length));
    }
    out.accept_limit = j;
    while (power > one_quarter) {
        power *= p;
        if (++j > caps.max_critical_length)
            throw ResourceCapExceeded("critical_lengths: R_p exceeds the cap of " +
                                      std::to_string(caps.max_critical_length));
    }
    out.reject_start = j;
    return out;
}

OneWayDfa up_dfa(const Rational& p, const Caps& caps)
{
    const auto lengths = critical_lengths(p, caps);
    const std::size_t count = lengths.accept_limit + 1;
    if (count > caps.max_states) throw ResourceCapExceeded("up_dfa: A_p + 1 exceeds the state cap");
    std::vector<DfaTransition> tr;
    std::vector<State> accepting;
    std::vector<std::string> labels;
    for (State q = 0; q < count; ++q) {
        if (q + 1 < count) tr.push_back({q, 'a', q + 1});
        accepting.push_back(q);
        labels.push_back("acc_" + std::to_string(q));
    }
    return OneWayDfa(count, Alphabet{'a'}, 0, std::move(tr), std::move(accepting), std::move(labels));
}

// ------------------------------------------------------------------ parity

PromiseProblem parity_problem(std::function<bool(std::size_t)> member, std::string name)
{
    return unary_problem(
        std::move(name), 'a', [member](std::size_t len) { return len % 2 == 0 && member(len / 2); },
        [member](std::size_t len) { return len % 2 == 1 && member(len / 2); });
}

OneWayDfa parity_dfa()
{
    return OneWayDfa(2, Alphabet{'a'}, 0, {{0, 'a', 1}, {1, 'a', 0}}, {0}, {"s1", "s2"});
}

}  // namespace automata
