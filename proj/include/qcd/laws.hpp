#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qcd/density.hpp"

namespace qcd {

// Time-indexed pre-change law {f_n}, n >= 1.
class PreChangeLaw {
public:
    enum class Kind { Constant, Periodic, Explicit, Tabulated };

    static PreChangeLaw constant(Density f);
    static PreChangeLaw periodic(std::vector<Density> slots);
    static PreChangeLaw explicit_fn(std::function<Density(int)> fn);
    static PreChangeLaw tabulated(std::vector<Density> table);

    Kind kind() const { return kind_; }
    Density at(int n) const; // throws std::out_of_range past a Tabulated horizon
    int period() const;      // Periodic only
    std::optional<int> horizon() const; // Tabulated only
    const std::vector<Density>& slots() const { return slots_; }

private:
    PreChangeLaw(Kind k) : kind_(k) {}
    Kind kind_;
    std::vector<Density> slots_;
    std::function<Density(int)> fn_;
};

// (time, change point)-indexed post-change law {g_{n,nu}}, n >= nu >= 1.
// ChangeAligned laws apply g_{n,nu} = h_{n-nu+1} and repeat the final
// density past the end of the list.
class PostChangeLaw {
public:
    enum class Kind { Constant, Periodic, NuIndexed, ChangeAligned };

    static PostChangeLaw constant(Density g);
    static PostChangeLaw periodic(std::vector<Density> slots);
    static PostChangeLaw nu_indexed(std::function<Density(int, int)> fn);
    static PostChangeLaw change_aligned(std::vector<Density> h);

    Kind kind() const { return kind_; }
    Density at(int n, int nu) const;
    // Whether g_{n,nu} actually varies with nu (false for Constant/Periodic).
    bool nu_dependent() const;
    int period() const; // Periodic only
    const std::vector<Density>& slots() const { return slots_; }

private:
    PostChangeLaw(Kind k) : kind_(k) {}
    Kind kind_;
    std::vector<Density> slots_;
    std::function<Density(int, int)> fn_;
};

// Least favorable pre/post pair. Construction checks the model requirement
// D(g_{n,nu} || f_n) > 0 on a finite validation grid.
class LflPair {
public:
    LflPair(PreChangeLaw pre, PostChangeLaw post);

    const PreChangeLaw& pre() const { return pre_; }
    const PostChangeLaw& post() const { return post_; }

    // log g_{n,nu}(x) / f_n(x)
    double llr(int n, int nu, double x) const;

    bool constant_laws() const {
        return pre_.kind() == PreChangeLaw::Kind::Constant &&
               post_.kind() == PostChangeLaw::Kind::Constant;
    }

private:
    PreChangeLaw pre_;
    PostChangeLaw post_;
};

// Parameter bound sequence for an uncertainty class. Values are family
// parameters (Gaussian means with unit variance, or Poisson rates).
struct BoundSeq {
    enum class Kind { Constant, Periodic, Tabulated, ChangeAligned };
    Kind kind = Kind::Constant;
    std::vector<double> values;

    static BoundSeq constant(double v) { return {Kind::Constant, {v}}; }
    static BoundSeq periodic(std::vector<double> v) { return {Kind::Periodic, std::move(v)}; }
    static BoundSeq tabulated(std::vector<double> v) { return {Kind::Tabulated, std::move(v)}; }
    static BoundSeq change_aligned(std::vector<double> v) { return {Kind::ChangeAligned, std::move(v)}; }

    double at(int n) const;         // time-indexed (not valid for ChangeAligned)
    double at(int n, int nu) const; // (time, change point)-indexed
    // Largest time index worth checking before the sequence provably repeats.
    int validation_horizon() const;
};

// Interval-parameterized uncertainty class: per-time upper bound on the
// pre-change parameter, per-(time, change point) lower bound on the
// post-change parameter. Gaussian classes fix the variance at 1.
// Separation (pre bound strictly below post bound) is checked on a finite
// grid at construction; violations are rejected.
class UncertaintyClass {
public:
    UncertaintyClass(Family family, BoundSeq pre_upper, BoundSeq post_lower);

    Family family() const { return family_; }
    const BoundSeq& pre_upper() const { return pre_upper_; }
    const BoundSeq& post_lower() const { return post_lower_; }

    // Whether the density is an admissible class member at the given index.
    bool pre_contains(int n, const Density& f) const;
    bool post_contains(int n, int nu, const Density& g) const;

    Density member_density(double param) const;

private:
    Family family_;
    BoundSeq pre_upper_;
    BoundSeq post_lower_;
};

// Build the law pair whose parameters follow the given bound sequences.
LflPair lfl_from_params(Family family, const BoundSeq& pre, const BoundSeq& post);

// Least favorable laws of an interval class: the pre law sits at the upper
// pre-change bound, the post law at the lower post-change bound. The
// returned pair is spot-checked for MLR order on the validation grid.
LflPair derive_lfl(const UncertaintyClass& cls);

enum class InfoRegime { Iid, Ipid, MlrExploding };

struct InformationNumber {
    double value = 0.0;
    InfoRegime regime = InfoRegime::Iid;
    int period = 0;     // Ipid
    int truncation = 0; // MlrExploding: depth N of the averaged partial sums
    std::vector<double> partial_averages; // MlrExploding running averages
    bool convergence_warning = false;
};

// Information number governing the asymptotic delay |log alpha| / I.
//   Iid:          I = D(g || f) for constant laws.
//   Ipid:         I = (1/T) sum_n D(g_n || f_n) over one period.
//   MlrExploding: I ~ (1/N) sum_{m<=N} D(h_m || f), with partial averages
//                 reported; param is the truncation depth N (default 400).
// A convergence warning is set when the running average still moves by more
// than 1e-3 (relative) over the last N/10 terms.
InformationNumber information_number(const LflPair& lfl, InfoRegime regime, int param = 0);

} // namespace qcd
