#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "certificate.hpp"
#include "circuit.hpp"
#include "cube.hpp"
#include "errors.hpp"
#include "truth_table.hpp"

namespace ac {

// Smallest-index gate among the first `limit` gates that is not frozen and
// evaluates to 1 at `point`.
inline std::optional<int> first_firing_gate(const Circuit& c,
                                            const std::vector<bool>& frozen,
                                            int limit,
                                            const BitTuple& point) {
    const EvalResult r = c.evaluate(point);
    const int hi = std::min(limit, c.gate_count());
    for (int j = 0; j < hi; ++j) {
        const bool is_frozen = j < static_cast<int>(frozen.size()) && frozen[j];
        if (!is_frozen && r.values[static_cast<std::size_t>(j)] == 1) return j;
    }
    return std::nullopt;
}

namespace detail {

// Replays the chain-building adversary against one concrete circuit.
//
// The adversary fixes input coordinates one at a time, keeping a subcube
// whose bottom corner has all free coordinates 0 and whose top corner has
// them all 1.  The corners visited along the way form an ascending chain
// with one tuple per weight.  A gate that evaluates to 1 on a corner is
// "charged" on that corner and immediately silenced by fixing one free
// coordinate it reads: the gate's support is an antichain, so moving the
// corner strictly down (top side) or strictly up (bottom side) in one read
// coordinate leaves the support.  Each gate pays at most once, so the number
// of charges is a lower bound on the gate count of ANY circuit computing the
// target function.  Every step of the replay is checked; a failed check
// throws invariant_violation carrying the transcript.
class AdversaryRun {
public:
    AdversaryRun(const Circuit& c, TargetFunction f)
        : c_(c),
          f_(f),
          n_(c.inputs()),
          s_(c.gate_count()),
          frozen_(static_cast<std::size_t>(s_), false),
          charged_(static_cast<std::size_t>(s_), false),
          slot_(static_cast<std::size_t>(n_) + 1),
          slot_charge_(static_cast<std::size_t>(n_) + 1) {
        const std::vector<std::string> problems = c.validate();
        if (!problems.empty())
            throw precondition_error("circuit fails validation: " + problems.front());
        if (n_ > TruthTable::max_inputs)
            throw precondition_error("cannot verify the target function beyond " +
                                     std::to_string(TruthTable::max_inputs) +
                                     " inputs");
        if (c.truth_table() != target_table(f, n_))
            throw precondition_error(std::string("circuit does not compute ") +
                                     target_name(f));
        slot_[0] = bottom();
        slot_[static_cast<std::size_t>(n_)] = top();
        log_ << "extremes: bottom " << bottom().to_string() << " top "
             << top().to_string() << "\n";
    }

    ChainCertificate run() {
        stage_one();
        if (f_ == TargetFunction::parity)
            stage_two_parity();
        else
            stage_two_majority();
        return finish();
    }

private:
    BitTuple bottom() const { return Subcube(n_, fixed0_, fixed1_).bottom(); }
    BitTuple top() const { return Subcube(n_, fixed0_, fixed1_).top(); }
    std::uint32_t free_mask() const {
        return BitTuple::mask_of(n_) & ~fixed0_ & ~fixed1_;
    }
    int value(int g, const BitTuple& e) const {
        return c_.evaluate(e).values[static_cast<std::size_t>(g)];
    }
    // Free input coordinates the gate reads directly.
    std::uint32_t free_wires(int g) const {
        std::uint32_t m = 0;
        for (const Wire& w : c_.gate(g).wires)
            if (w.kind == Wire::Kind::input) m |= coord_bit(n_, w.index);
        return m & free_mask();
    }
    int charge_count() const {
        int k = 0;
        for (const auto& ch : slot_charge_) k += ch.has_value();
        return k;
    }
    [[noreturn]] void violate(const std::string& msg) {
        log_ << "violation: " << msg << "\n";
        throw invariant_violation(msg, log_.str());
    }

    void charge(int g, const BitTuple& e) {
        const std::size_t w = static_cast<std::size_t>(e.weight());
        if (!slot_[w] || !(*slot_[w] == e))
            violate("charge target " + e.to_string() + " is not in the chain");
        if (slot_charge_[w])
            violate("chain tuple " + e.to_string() + " already pays a gate");
        if (charged_[static_cast<std::size_t>(g)])
            violate("gate g" + std::to_string(g + 1) + " charged twice");
        if (value(g, e) != 1)
            violate("charged gate g" + std::to_string(g + 1) + " is 0 on " +
                    e.to_string());
        charged_[static_cast<std::size_t>(g)] = true;
        slot_charge_[w] = g;
        log_ << "charge g" << (g + 1) << " on " << e.to_string() << "\n";
    }

    void append(const BitTuple& e) {
        auto& s = slot_[static_cast<std::size_t>(e.weight())];
        if (s) {
            // both corners coincide exactly when no coordinate is free
            if (free_mask() != 0 || !(*s == e))
                violate("chain slot collision at weight " +
                        std::to_string(e.weight()));
            log_ << "closure: extremes meet at " << e.to_string() << "\n";
        } else {
            s = e;
        }
    }

    // Freeze every considered gate that lost its last free input wire.  For
    // fixes made to silence a charged gate we additionally check that a gate
    // frozen as a side effect is itself silent wherever all lower non-frozen
    // gates are silent — that is what lets frozen gates drop out of play.
    void sweep_freezes(bool charge_driven) {
        for (int g = 0; g < considered_; ++g) {
            if (frozen_[static_cast<std::size_t>(g)] || free_wires(g) != 0) continue;
            frozen_[static_cast<std::size_t>(g)] = true;
            log_ << "freeze g" << (g + 1) << ": no free input wires left\n";
            if (!charge_driven) continue;
            for (const BitTuple& e : {bottom(), top()}) {
                bool lower_quiet = true;
                for (int j = 0; j < g && lower_quiet; ++j)
                    if (!frozen_[static_cast<std::size_t>(j)] && value(j, e) == 1)
                        lower_quiet = false;
                if (lower_quiet && value(g, e) != 0)
                    violate("gate g" + std::to_string(g + 1) +
                            " froze while firing on " + e.to_string());
            }
        }
    }

    void fix(int i, int bit, bool charge_driven) {
        const std::uint32_t b = coord_bit(n_, i);
        if ((free_mask() & b) == 0)
            violate("coordinate x" + std::to_string(i + 1) + " is not free");
        (bit ? fixed1_ : fixed0_) |= b;
        const BitTuple e = bit ? bottom() : top();
        log_ << "fix x" << (i + 1) << " = " << bit << "; "
             << (bit ? "bottom" : "top") << " -> " << e.to_string() << "\n";
        append(e);
        sweep_freezes(charge_driven);
    }

    // Silences an already-charged gate by fixing the smallest free
    // coordinate it reads, then chases any gate the move wakes up.  Each
    // cascade step charges the woken gate on the fresh corner before
    // silencing it in turn.
    void resolve(int g, bool top_side, int limit) {
        while (true) {
            const std::uint32_t fw = free_wires(g);
            if (fw == 0) {
                // A gate charged in stage two may have lost its read
                // coordinates to the extension fix itself; it is already
                // silent on every future corner of the moving side.
                if (!stage2_)
                    violate("charged gate g" + std::to_string(g + 1) +
                            " reads no free input");
                log_ << "no free input left on g" << (g + 1)
                     << "; nothing to fix\n";
                return;
            }
            fix(lowest_coord(n_, fw), top_side ? 0 : 1, true);
            if (free_mask() == 0) return;
            const BitTuple e = top_side ? top() : bottom();
            const std::optional<int> j = first_firing_gate(c_, frozen_, limit, e);
            if (!j) return;
            log_ << "cascade: g" << (*j + 1) << " fires on " << e.to_string()
                 << "\n";
            charge(*j, e);
            g = *j;
        }
    }

    // Nothing non-frozen among the considered gates may fire on a corner
    // once a consideration step has finished.
    void assert_at_rest() {
        for (const BitTuple& e : {bottom(), top()})
            for (int j = 0; j < considered_; ++j)
                if (!frozen_[static_cast<std::size_t>(j)] && value(j, e) != 0)
                    violate("gate g" + std::to_string(j + 1) +
                            " fires at rest on " + e.to_string());
    }

    void stage_one() {
        for (int i = 0; i < s_; ++i) {
            considered_ = i + 1;
            if (free_wires(i) == 0) {
                frozen_[static_cast<std::size_t>(i)] = true;
                log_ << "consider g" << (i + 1) << ": no free input wires, frozen\n";
                continue;
            }
            const BitTuple b = bottom(), t = top();
            const int vb = value(i, b), vt = value(i, t);
            if (vb == 1 && vt == 1)
                violate("gate g" + std::to_string(i + 1) +
                        " fires on both extremes");
            if (vb == 0 && vt == 0) {
                log_ << "consider g" << (i + 1) << ": quiet\n";
            } else {
                const bool top_side = vt == 1;
                log_ << "consider g" << (i + 1) << ": fires on "
                     << (top_side ? t : b).to_string() << "\n";
                charge(i, top_side ? t : b);
                resolve(i, top_side, considered_);
            }
            assert_at_rest();
        }
        log_ << "stage 1 complete; " << charge_count() << " charges\n";
    }

    // Parity: every single-coordinate extension flips the output, so each
    // extension wakes a smallest differing gate, which pays for the fresh
    // corner and is then silenced like any stage-one offender.
    void stage_two_parity() {
        stage2_ = true;
        considered_ = s_;
        while (free_mask() != 0) {
            const BitTuple old_b = bottom();
            const std::vector<bool> pre_frozen = frozen_;
            const EvalResult before = c_.evaluate(old_b);
            fix(lowest_coord(n_, free_mask()), 1, false);
            const BitTuple nb = bottom();
            const EvalResult after = c_.evaluate(nb);
            int j = -1;
            for (int k = 0; k < s_ && j < 0; ++k)
                if (before.values[static_cast<std::size_t>(k)] !=
                    after.values[static_cast<std::size_t>(k)])
                    j = k;
            if (j < 0) violate("no gate distinguishes the extension");
            if (pre_frozen[static_cast<std::size_t>(j)])
                violate("smallest differing gate g" + std::to_string(j + 1) +
                        " was frozen");
            if (after.values[static_cast<std::size_t>(j)] != 1)
                violate("smallest differing gate g" + std::to_string(j + 1) +
                        " is 0 on the new bottom");
            log_ << "extension wakes g" << (j + 1) << "\n";
            charge(j, nb);
            resolve(j, false, s_);
            assert_at_rest();
        }
    }

    // Majority: once every gate is settled, extending the bottom with 1s
    // never changes the replayed bound; the chain is completed silently.
    // When the settled output is already 1 the output gate itself still owes
    // a charge and pays on the heaviest unpaid majority-1 corner.
    void stage_two_majority() {
        stage2_ = true;
        considered_ = s_;
        const EvalResult rb = c_.evaluate(bottom());
        const EvalResult rt = c_.evaluate(top());
        for (int k = 0; k < s_; ++k)
            if (rb.values[static_cast<std::size_t>(k)] !=
                rt.values[static_cast<std::size_t>(k)])
                violate("gate g" + std::to_string(k + 1) +
                        " differs across the surviving corners");
        const int a = rb.values[static_cast<std::size_t>(s_ - 1)];
        log_ << "settled output value: " << a << "\n";
        while (free_mask() != 0) fix(lowest_coord(n_, free_mask()), 1, false);
        if (a == 1 && !charged_[static_cast<std::size_t>(s_ - 1)]) {
            const int thr = (n_ + 1) / 2;
            for (int w = n_; w >= thr; --w) {
                auto& ch = slot_charge_[static_cast<std::size_t>(w)];
                if (ch) continue;
                log_ << "output gate still owes a charge\n";
                charge(s_ - 1, *slot_[static_cast<std::size_t>(w)]);
                break;
            }
        }
    }

    ChainCertificate finish() {
        ChainCertificate cert;
        cert.n = n_;
        cert.function = f_;
        for (int w = 0; w <= n_; ++w) {
            const auto& s = slot_[static_cast<std::size_t>(w)];
            if (!s) violate("chain slot for weight " + std::to_string(w) + " is empty");
            cert.tuples.push_back(*s);
            cert.charges.push_back(slot_charge_[static_cast<std::size_t>(w)]);
        }
        cert.claimed_bound = charge_count();
        log_ << "bound " << cert.claimed_bound << "\n";
        cert.transcript = log_.str();
        const std::vector<std::string> bad = check_certificate(cert, c_);
        if (!bad.empty()) {
            for (const std::string& m : bad) log_ << "self-check: " << m << "\n";
            throw invariant_violation(
                "constructed certificate fails its own check: " + bad.front(),
                log_.str());
        }
        return cert;
    }

    const Circuit& c_;
    TargetFunction f_;
    int n_, s_;
    std::uint32_t fixed0_ = 0, fixed1_ = 0;
    std::vector<bool> frozen_, charged_;
    int considered_ = 0;
    bool stage2_ = false;
    std::vector<std::optional<BitTuple>> slot_;
    std::vector<std::optional<int>> slot_charge_;
    std::ostringstream log_;
};

}  // namespace detail

// Replays the adversary against a circuit that computes parity; the returned
// certificate proves the circuit has at least floor((n+1)/2) gates.
inline ChainCertificate run_parity_adversary(const Circuit& c) {
    return detail::AdversaryRun(c, TargetFunction::parity).run();
}

// Replays the adversary against a circuit that computes majority; the
// returned certificate proves the circuit has at least floor(n/2)+1 gates.
inline ChainCertificate run_majority_adversary(const Circuit& c) {
    return detail::AdversaryRun(c, TargetFunction::majority).run();
}

}  // namespace ac
