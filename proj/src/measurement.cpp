#include "qcf/measurement.hpp"

#include <array>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "qcf/errors.hpp"
#include "qcf/rng.hpp"

namespace qcf {

namespace {

using nlohmann::json;

void check_packable(int n) {
    if (n < 1 || n > kMaxSimQubits) {
        throw ValidationError("measurement supports 1.." +
                              std::to_string(kMaxSimQubits) + " qubits, got " +
                              std::to_string(n));
    }
}

MeasurementSet make_set(Strategy strategy, const Circuit& c, int lambda) {
    if (lambda < 1) {
        throw ValidationError("shot budget prefactor must be >= 1");
    }
    check_packable(c.n_qubits);
    MeasurementSet ms;
    ms.strategy = strategy;
    ms.n = c.n_qubits;
    ms.lambda = lambda;
    ms.budget = shot_budget(c.n_qubits, lambda);
    ms.circuit_seed = c.seed;
    ms.shots.reserve(ms.budget);
    return ms;
}

void append_fixed_basis_shots(MeasurementSet& ms, const Statevector& rotated,
                              Basis basis, std::size_t count, Rng& rng) {
    const std::uint64_t bases = uniform_bases_word(ms.n, basis);
    for (std::uint64_t outcome : sample(rotated, count, rng)) {
        ms.shots.push_back(ShotRecord{outcome, bases});
    }
}

MeasurementSet measure_computational(Strategy tag, const Circuit& c, int lambda,
                                     std::uint64_t seed) {
    MeasurementSet ms = make_set(tag, c, lambda);
    const Statevector psi = run(c);
    Rng rng(seed);
    append_fixed_basis_shots(ms, psi, Basis::Z, ms.budget, rng);
    return ms;
}

std::string bits_to_string(std::uint64_t bits, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int q = 0; q < n; ++q) {
        if ((bits >> q) & 1) {
            s[static_cast<std::size_t>(q)] = '1';
        }
    }
    return s;
}

std::string bases_to_string(const ShotRecord& r, int n) {
    std::string s(static_cast<std::size_t>(n), 'Z');
    for (int q = 0; q < n; ++q) {
        s[static_cast<std::size_t>(q)] = to_char(r.basis(q));
    }
    return s;
}

} // namespace

std::string_view to_string(Strategy s) {
    switch (s) {
    case Strategy::ZOnly: return "z-only";
    case Strategy::NN: return "nn";
    case Strategy::MultiBasis: return "multi-basis";
    case Strategy::Shadows: return "shadows";
    }
    throw ValidationError("unknown strategy");
}

Strategy strategy_from_string(std::string_view s) {
    if (s == "z-only") return Strategy::ZOnly;
    if (s == "nn") return Strategy::NN;
    if (s == "multi-basis") return Strategy::MultiBasis;
    if (s == "shadows") return Strategy::Shadows;
    throw ParseError("unknown strategy \"" + std::string(s) + "\"");
}

std::uint64_t uniform_bases_word(int n, Basis b) {
    std::uint64_t word = 0;
    for (int q = 0; q < n; ++q) {
        word |= static_cast<std::uint64_t>(b) << (2 * q);
    }
    return word;
}

std::size_t shot_budget(int n, int lambda) {
    if (n < 1 || lambda < 1) {
        throw ValidationError("shot budget requires n >= 1 and lambda >= 1");
    }
    return static_cast<std::size_t>(lambda) * static_cast<std::size_t>(n) *
           static_cast<std::size_t>(n);
}

std::array<std::size_t, 3> multi_basis_block_sizes(std::size_t budget) {
    const std::size_t base = budget / 3;
    const std::size_t rem = budget % 3;
    return {base + (rem >= 1 ? 1 : 0), base + (rem >= 2 ? 1 : 0), base};
}

MeasurementSet measure_z_only(const Circuit& c, int lambda, std::uint64_t seed) {
    return measure_computational(Strategy::ZOnly, c, lambda, seed);
}

MeasurementSet measure_nn(const Circuit& c, int lambda, std::uint64_t seed) {
    return measure_computational(Strategy::NN, c, lambda, seed);
}

MeasurementSet measure_multi_basis(const Circuit& c, int lambda, std::uint64_t seed) {
    MeasurementSet ms = make_set(Strategy::MultiBasis, c, lambda);
    const Statevector psi = run(c);
    Rng rng(seed);

    const auto blocks = multi_basis_block_sizes(ms.budget);
    static constexpr Basis kBlockOrder[3] = {Basis::Z, Basis::X, Basis::Y};
    for (int b = 0; b < 3; ++b) {
        const Basis basis = kBlockOrder[b];
        std::vector<Basis> frame(static_cast<std::size_t>(ms.n), basis);
        const Statevector rotated = apply_basis_rotation(psi, frame);
        append_fixed_basis_shots(ms, rotated, basis, blocks[static_cast<std::size_t>(b)],
                                 rng);
    }
    return ms;
}

std::vector<ShotRecord> acquire_shadow_shots(const Statevector& psi, std::size_t count,
                                             std::uint64_t seed) {
    check_packable(psi.n);
    Rng rng(seed);
    std::vector<ShotRecord> shots;
    shots.reserve(count);
    std::vector<Basis> frame(static_cast<std::size_t>(psi.n));
    for (std::size_t s = 0; s < count; ++s) {
        ShotRecord rec;
        for (int q = 0; q < psi.n; ++q) {
            const Basis b = static_cast<Basis>(rng.uniform_int(3));
            frame[static_cast<std::size_t>(q)] = b;
            rec.set_basis(q, b);
        }
        Statevector rotated = apply_basis_rotation(psi, frame);
        rec.bits = sample(rotated, 1, rng)[0];
        shots.push_back(rec);
    }
    return shots;
}

MeasurementSet measure_shadows(const Circuit& c, int lambda, std::uint64_t seed) {
    MeasurementSet ms = make_set(Strategy::Shadows, c, lambda);
    const Statevector psi = run(c);
    ms.shots = acquire_shadow_shots(psi, ms.budget, seed);
    return ms;
}

MeasurementSet measure(Strategy strategy, const Circuit& c, int lambda,
                       std::uint64_t seed) {
    switch (strategy) {
    case Strategy::ZOnly: return measure_z_only(c, lambda, seed);
    case Strategy::NN: return measure_nn(c, lambda, seed);
    case Strategy::MultiBasis: return measure_multi_basis(c, lambda, seed);
    case Strategy::Shadows: return measure_shadows(c, lambda, seed);
    }
    throw ValidationError("unknown strategy");
}

std::uint64_t measurement_seed(std::uint64_t base, Strategy strategy) {
    // ZOnly and NN share an acquisition stream by contract.
    std::uint64_t tag;
    switch (strategy) {
    case Strategy::ZOnly:
    case Strategy::NN: tag = 0; break;
    case Strategy::MultiBasis: tag = 1; break;
    case Strategy::Shadows: tag = 2; break;
    default: throw ValidationError("unknown strategy");
    }
    return mix_seed(base, 0x6d656173u + tag);
}

void append_measurement_set(std::ostream& out, const MeasurementSet& ms) {
    json header;
    header["strategy"] = to_string(ms.strategy);
    header["n"] = ms.n;
    header["lambda"] = ms.lambda;
    header["budget"] = ms.budget;
    header["circuit_seed"] = ms.circuit_seed;
    out << header.dump() << '\n';
    for (const ShotRecord& r : ms.shots) {
        json line;
        line["bits"] = bits_to_string(r.bits, ms.n);
        line["bases"] = bases_to_string(r, ms.n);
        out << line.dump() << '\n';
    }
}

void write_measurement_sets(const std::string& path,
                            const std::vector<MeasurementSet>& sets) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }
    for (const MeasurementSet& ms : sets) {
        append_measurement_set(out, ms);
    }
    if (!out) {
        throw IoError("write failed for " + path);
    }
}

std::vector<MeasurementSet> read_measurement_sets(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path);
    }

    std::vector<MeasurementSet> sets;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError(path + ":" + std::to_string(line_no) +
                             ": invalid JSON: " + e.what());
        }
        try {
            if (j.contains("strategy")) {
                MeasurementSet ms;
                ms.strategy = strategy_from_string(j.at("strategy").get<std::string>());
                ms.n = j.at("n").get<int>();
                ms.lambda = j.at("lambda").get<int>();
                ms.budget = j.at("budget").get<std::size_t>();
                ms.circuit_seed = j.at("circuit_seed").get<std::uint64_t>();
                check_packable(ms.n);
                sets.push_back(std::move(ms));
            } else if (j.contains("bits")) {
                if (sets.empty()) {
                    throw ParseError("shot record before any header line");
                }
                MeasurementSet& ms = sets.back();
                const auto bits = j.at("bits").get<std::string>();
                const auto bases = j.at("bases").get<std::string>();
                if (static_cast<int>(bits.size()) != ms.n ||
                    static_cast<int>(bases.size()) != ms.n) {
                    throw ParseError("field \"bits\"/\"bases\" length does not match n");
                }
                ShotRecord rec;
                for (int q = 0; q < ms.n; ++q) {
                    const char bc = bits[static_cast<std::size_t>(q)];
                    if (bc == '1') {
                        rec.bits |= std::uint64_t{1} << q;
                    } else if (bc != '0') {
                        throw ParseError(std::string("field \"bits\" has character \"") +
                                         bc + "\"");
                    }
                    rec.set_basis(q, basis_from_char(bases[static_cast<std::size_t>(q)]));
                }
                ms.shots.push_back(rec);
            } else {
                throw ParseError("line is neither a header nor a shot record");
            }
        } catch (const json::exception& e) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": " + e.what());
        } catch (const ValidationError& e) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return sets;
}

} // namespace qcf
