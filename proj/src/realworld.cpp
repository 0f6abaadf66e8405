#include "bellcheck/realworld.hpp"

#include <cmath>
#include <string>

#include "bellcheck/errors.hpp"
#include "bellcheck/parallel.hpp"

namespace bellcheck {
namespace {

constexpr double kRouteTolerance = 1e-12;
constexpr std::size_t kSites = 8;

struct PairCounts {
    std::uint64_t plus = 0;  // draws with x*y = +1
    std::uint64_t minus = 0;
};

ComplexMatrix spectral_projector(Angle phi, int outcome_index) {
    const auto id = ComplexMatrix::identity(2);
    return 0.5 * (id + Complex(outcome_value(outcome_index)) * z_operator(phi));
}

}  // namespace

int RunRecord::statistic() const {
    int s = 0;
    for (std::size_t n = 0; n < 4; ++n) {
        const int product = outcomes[n].x * outcomes[n].y;
        s += n == 3 ? -product : product;
    }
    return s;
}

std::array<ExperimentSettings, 4> experiment_settings(const AngleConfig& cfg) {
    return {{{cfg.alpha1(), cfg.beta1()},
             {cfg.alpha1(), cfg.beta2()},
             {cfg.alpha2(), cfg.beta1()},
             {cfg.alpha2(), cfg.beta2()}}};
}

PairSampler::PairSampler(Angle alpha, Angle beta) : PairSampler(joint_pmf(singlet_state(), alpha, beta)) {}

PairSampler::PairSampler(const JointPmf2x2& pmf) {
    double acc = 0.0;
    for (int cell = 0; cell < 3; ++cell) {
        acc += pmf(cell / 2, cell % 2);
        cdf_[cell] = acc;
    }
}

std::pair<int, int> PairSampler::draw(double u) const {
    int cell = 0;
    while (cell < 3 && u >= cdf_[cell]) ++cell;
    return {outcome_value(cell / 2), outcome_value(cell % 2)};
}

std::pair<int, int> sample_pair(Angle alpha, Angle beta, const CounterStream& stream, std::uint64_t index) {
    return PairSampler(alpha, beta).draw(stream.uniform(index));
}

CounterStream experiment_stream(std::uint64_t seed, int experiment) {
    if (experiment < 1 || experiment > 4) throw ValidationError("experiment index must be in 1..4");
    return CounterStream(derive_stream_key(seed, static_cast<std::uint64_t>(experiment)));
}

SimulationResult run_experiments(const AngleConfig& cfg, std::uint64_t n, std::uint64_t seed,
                                 std::size_t shards, std::size_t workers) {
    if (n == 0) throw ValidationError("sample count must be at least 1");
    if (shards == 0) throw ValidationError("shard count must be at least 1");
    const auto settings = experiment_settings(cfg);

    SimulationResult result;
    for (int e = 0; e < 4; ++e) {
        const PairSampler sampler(settings[e].alice, settings[e].bob);
        const CounterStream stream = experiment_stream(seed, e + 1);
        std::vector<PairCounts> per_shard(shards);
        for_each_shard(shards, workers, [&](std::size_t s) {
            const std::uint64_t begin = n * s / shards;
            const std::uint64_t end = n * (s + 1) / shards;
            PairCounts counts;
            for (std::uint64_t i = begin; i < end; ++i) {
                const auto [x, y] = sampler.draw(stream.uniform(i));
                if (x * y > 0) {
                    ++counts.plus;
                } else {
                    ++counts.minus;
                }
            }
            per_shard[s] = counts;
        });
        PairCounts total;
        for (const auto& c : per_shard) {
            total.plus += c.plus;
            total.minus += c.minus;
        }
        result.correlations[e] = two_point_estimate(total.plus, total.minus);
    }
    constexpr std::array<int, 4> kSigns{1, 1, 1, -1};
    result.e_rw = combine_signed(result.correlations, kSigns);
    return result;
}

std::vector<RunRecord> sample_runs(const AngleConfig& cfg, std::uint64_t n, std::uint64_t seed) {
    const auto settings = experiment_settings(cfg);
    std::vector<PairSampler> samplers;
    std::vector<CounterStream> streams;
    for (int e = 0; e < 4; ++e) {
        samplers.emplace_back(settings[e].alice, settings[e].bob);
        streams.push_back(experiment_stream(seed, e + 1));
    }
    std::vector<RunRecord> runs(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        for (int e = 0; e < 4; ++e) {
            const auto [x, y] = samplers[e].draw(streams[e].uniform(i));
            runs[i].outcomes[e] = {e + 1, x, y};
        }
    }
    return runs;
}

std::vector<RunRecord> enumerate_total_sample_space() {
    std::vector<RunRecord> out;
    out.reserve(256);
    for (int code = 0; code < 256; ++code) {
        RunRecord run;
        for (int e = 0; e < 4; ++e) {
            const int event = (code >> (2 * (3 - e))) & 3;  // omega_{n,event+1}
            run.outcomes[e] = {e + 1, outcome_value(event / 2), outcome_value(event % 2)};
        }
        out.push_back(run);
    }
    return out;
}

ComplexVector tensor_state_T() {
    const auto psi = singlet_state();
    return kron(kron(kron(psi, psi), psi), psi);
}

Pmf8::Pmf8(const std::array<double, 256>& p) : p_(p) {
    for (double v : p_) {
        if (!(v >= 0.0)) throw ValidationError("Pmf8 entry is negative");
    }
    if (std::abs(sum() - 1.0) > 1e-12) throw ValidationError("Pmf8 does not sum to 1");
}

double Pmf8::probability(const RunRecord& run) const { return p_[outcome_index(run)]; }

double Pmf8::sum() const {
    double s = 0.0;
    for (double v : p_) s += v;
    return s;
}

std::size_t outcome_index(const RunRecord& run) {
    std::size_t idx = 0;
    for (const auto& o : run.outcomes) {
        idx = (idx << 1) | (o.x < 0 ? 1u : 0u);
        idx = (idx << 1) | (o.y < 0 ? 1u : 0u);
    }
    return idx;
}

RunRecord run_from_index(std::size_t index) {
    if (index >= 256) throw ValidationError("outcome index out of range");
    RunRecord run;
    for (int e = 0; e < 4; ++e) {
        const int shift = 2 * (3 - e);
        const int xi = static_cast<int>((index >> (shift + 1)) & 1u);
        const int yi = static_cast<int>((index >> shift) & 1u);
        run.outcomes[e] = {e + 1, outcome_value(xi), outcome_value(yi)};
    }
    return run;
}

Pmf8 joint_pmf_T_born(const AngleConfig& cfg) {
    const auto settings = experiment_settings(cfg);
    // projectors[2 * site + outcome index], sites ordered A1 B1 A2 B2 ...
    std::vector<ComplexMatrix> projectors;
    for (const auto& s : settings) {
        for (Angle phi : {s.alice, s.bob}) {
            projectors.push_back(spectral_projector(phi, 0));
            projectors.push_back(spectral_projector(phi, 1));
        }
    }
    const auto psi_t = tensor_state_T();
    std::array<double, 256> p{};
    for (std::size_t r = 0; r < 256; ++r) {
        ComplexVector projected = psi_t;
        for (std::size_t site = 0; site < kSites; ++site) {
            const int bit = static_cast<int>((r >> (kSites - 1 - site)) & 1u);
            projected = apply_local(projectors[2 * site + bit], site, kSites, projected);
        }
        p[r] = clamp_probability(inner(psi_t, projected).real());
    }
    return Pmf8(p);
}

Pmf8 joint_pmf_T_factorized(const AngleConfig& cfg) {
    const auto settings = experiment_settings(cfg);
    const auto psi = singlet_state();
    std::vector<JointPmf2x2> pairs;
    for (const auto& s : settings) pairs.push_back(joint_pmf(psi, s.alice, s.bob));
    std::array<double, 256> p{};
    for (std::size_t r = 0; r < 256; ++r) {
        double prob = 1.0;
        for (int e = 0; e < 4; ++e) {
            const int shift = 2 * (3 - e);
            prob *= pairs[e](static_cast<int>((r >> (shift + 1)) & 1u), static_cast<int>((r >> shift) & 1u));
        }
        p[r] = prob;
    }
    return Pmf8(p);
}

Pmf8 joint_pmf_T(const AngleConfig& cfg) {
    const Pmf8 born = joint_pmf_T_born(cfg);
    const Pmf8 factorized = joint_pmf_T_factorized(cfg);
    for (std::size_t r = 0; r < 256; ++r) {
        if (std::abs(born[r] - factorized[r]) > kRouteTolerance) {
            throw InternalError("256-outcome PMF: Born and factorized routes disagree at outcome " +
                                std::to_string(r));
        }
    }
    return born;
}

double e_qm_T(const AngleConfig& cfg) {
    const Pmf8 pmf = joint_pmf_T(cfg);
    double e = 0.0;
    for (std::size_t r = 0; r < 256; ++r) e += pmf[r] * run_from_index(r).statistic();
    return e;
}

}  // namespace bellcheck
