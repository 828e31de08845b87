// Command-line front end: build, classify, standardize, enumerate and verify
// support-respecting weights and labeled-poset-block structures.

#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "sweights/codes.hpp"
#include "sweights/condsum.hpp"
#include "sweights/criteria_table.hpp"
#include "sweights/dot_export.hpp"
#include "sweights/isometry.hpp"
#include "sweights/json_io.hpp"

using namespace sweights;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCapExceeded = 3;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

bool is_weight_table_json(const json& j) { return j.is_object() && j.contains("weights"); }

struct Options {
    std::string format = "text";
    Caps caps;
};

int cmd_table1(const Options& opt) {
    CriteriaTable table = decoding_criteria_table_f22(opt.caps);
    if (opt.format == "json") {
        json rows = json::array();
        for (const CriteriaRow& r : table.rows)
            rows.push_back(json{{"criterion", r.criterion},
                                {"hamming", r.flags.hamming},
                                {"poset", r.flags.poset},
                                {"poset_block", r.flags.poset_block},
                                {"combinatorial", r.flags.combinatorial},
                                {"digraph", r.flags.digraph}});
        std::cout << json{{"classes", table.class_count}, {"rows", rows}, {"matches_expected", table.matches_expected}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << table.render();
        std::cout << (table.matches_expected ? "regenerated table matches the expected pattern\n"
                                             : "regenerated table DIFFERS from the expected pattern\n");
    }
    return table.matches_expected ? kExitOk : kExitDomain;
}

int cmd_weight(const Options& opt, const std::string& structure_path, const std::string& vec) {
    json j = load_json(structure_path);
    if (is_weight_table_json(j)) {
        SWeightTable wt = weight_table_from_json(j);
        if (vec.empty()) {
            if (opt.format == "dot") {
                std::cout << cube_to_dot(cube_from_sweight(wt));
                return kExitOk;
            }
            throw ParseError("weight needs a vector argument for table input");
        }
        int idx = parse_vector_string(wt.space(), vec);
        if (opt.format == "json")
            std::cout << json{{"vector", vec}, {"weight", wt.w[idx]}}.dump(2) << "\n";
        else
            std::cout << wt.w[idx] << "\n";
        return kExitOk;
    }
    LpbStructure s = lpb_from_json(j);
    if (vec.empty()) {
        if (opt.format == "dot") {
            std::cout << lpb_to_dot(s);
            return kExitOk;
        }
        throw ParseError("weight needs a vector argument for structure input");
    }
    int idx = parse_vector_string(s.space(), vec);
    int w = lpb_weight(s, idx);
    if (opt.format == "json")
        std::cout << json{{"vector", vec}, {"weight", w}}.dump(2) << "\n";
    else
        std::cout << w << "\n";
    return kExitOk;
}

int cmd_standardize(const Options& opt, const std::string& weight_path) {
    SWeightTable wt = weight_table_from_json(load_json(weight_path));
    SWeightReport valid = validate_sweight(wt);
    if (!valid.ok) throw DomainError("input is not an S-weight: " + valid.message);
    DeltaCube cube = cube_from_sweight(wt);
    CubeReport cube_valid = validate_cube(cube);
    if (!cube_valid.ok) throw DomainError("induced cube is invalid: " + cube_valid.message);

    // seeded random trail pairs as an extra consistency pass over the cube
    std::mt19937 rng(opt.caps.seed);
    std::vector<int> w = weights_of_cube(cube);
    for (int pair = 0; pair < 100; ++pair) {
        std::uint32_t target = rng() & (cube.vertices() - 1);
        std::vector<int> bits;
        for (int i = 0; i < cube.n; ++i)
            if (target >> i & 1u) bits.push_back(i);
        int sum = 0;
        std::uint32_t at = 0;
        std::shuffle(bits.begin(), bits.end(), rng);
        for (int b : bits) {
            sum += cube.at(at, b);
            at |= 1u << b;
        }
        if (sum != w[target]) throw DomainError("trail sums disagree on a valid cube");
    }

    DeltaCube standard = standardize(cube);
    if (opt.format == "dot") {
        std::cout << cube_to_dot(standard);
        return kExitOk;
    }
    SWeightTable out = table_from_cube(standard, wt.q);
    if (opt.format == "json") {
        std::cout << weight_table_to_json(out).dump(2) << "\n";
    } else {
        std::cout << "standard form " << (is_standard_form(cube) ? "(input already standard)" : "(values compressed)")
                  << ", max weight " << out.max_weight() << "\n"
                  << weight_table_to_json(out).dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_classify(const Options& opt, const std::string& weight_path) {
    SWeightTable wt = weight_table_from_json(load_json(weight_path));
    SWeightReport valid = validate_sweight(wt);
    if (!valid.ok) throw DomainError("input is not an S-weight: " + valid.message);
    FamilyFlags f = classify_criterion(wt);
    if (opt.format == "json") {
        std::cout << json{{"hamming", f.hamming},
                          {"poset", f.poset},
                          {"poset_block", f.poset_block},
                          {"combinatorial", f.combinatorial},
                          {"digraph", f.digraph}}
                         .dump(2)
                  << "\n";
    } else {
        auto mark = [](bool b) { return b ? "yes" : "no"; };
        std::cout << "hamming:       " << mark(f.hamming) << "\n"
                  << "poset:         " << mark(f.poset) << "\n"
                  << "poset-block:   " << mark(f.poset_block) << "\n"
                  << "combinatorial: " << mark(f.combinatorial) << "\n"
                  << "digraph:       " << mark(f.digraph) << "\n";
    }
    return kExitOk;
}

int cmd_isometries(const Options& opt, const std::string& input_path) {
    json j = load_json(input_path);
    if (is_weight_table_json(j)) {
        SWeightTable wt = weight_table_from_json(j);
        SWeightReport valid = validate_sweight(wt);
        if (!valid.ok) throw DomainError("input is not an S-weight: " + valid.message);
        SemidirectReport rep = check_semidirect_theorem(wt, opt.caps);
        const char* verdict = rep.verdict == SemidirectReport::Verdict::equal       ? "equal"
                              : rep.verdict == SemidirectReport::Verdict::contained ? "contained"
                                                                                    : "violated";
        if (opt.format == "json")
            std::cout << json{{"group_order", rep.gl_size},
                              {"cube_automorphisms", rep.aut_size},
                              {"domination_maps", rep.domination_size},
                              {"generated_order", rep.generated_size},
                              {"verdict", verdict}}
                             .dump(2)
                      << "\n";
        else
            std::cout << "isometry group order: " << rep.gl_size << "\n"
                      << "cube automorphisms:   " << rep.aut_size << "\n"
                      << "domination maps:      " << rep.domination_size << "\n"
                      << "generated subgroup:   " << rep.generated_size << " (" << verdict << ")\n";
        return rep.verdict == SemidirectReport::Verdict::violated ? kExitDomain : kExitOk;
    }
    LpbStructure s = lpb_from_json(j);
    LpbSemidirectReport rep = check_semidirect_lpb(s, opt.caps);
    if (opt.format == "json")
        std::cout << json{{"group_order", rep.gl_size},
                          {"perturbation_order", rep.n_size},
                          {"automorphism_order", rep.aut_size},
                          {"normal", rep.n_is_normal},
                          {"unique_factorization", rep.unique_factorization},
                          {"holds", rep.holds}}
                         .dump(2)
                  << "\n";
    else
        std::cout << "isometry group order:   " << rep.gl_size << "\n"
                  << "perturbation subgroup:  " << rep.n_size << (rep.n_is_normal ? " (normal)" : " (NOT normal)")
                  << "\n"
                  << "structure automorphisms: " << rep.aut_size << "\n"
                  << "product decomposition:  " << (rep.holds ? "holds" : "FAILS") << "\n";
    return rep.holds ? kExitOk : kExitDomain;
}

int cmd_enumerator(const Options& opt, const std::string& structure_path, const std::string& code_path) {
    LpbStructure s = lpb_from_json(load_json(structure_path));
    LinearCode code = code_from_json(load_json(code_path));
    WeightEnumerator e = weight_enumerator(code, s, opt.caps);
    if (opt.format == "json")
        std::cout << enumerator_to_json(e).dump(2) << "\n";
    else
        std::cout << e.to_string() << "\n";
    return kExitOk;
}

int cmd_macwilliams(const Options& opt, const std::string& structure_path, int k) {
    LpbStructure s = lpb_from_json(load_json(structure_path));
    if (k < 0 || k > s.n()) throw DomainError("dimension k out of range");
    MacWilliamsVerdict v = macwilliams_verdict(s, k, opt.caps);
    if (opt.format == "json") {
        json out{{"admits", v.admits}};
        if (v.witness) {
            out["witness"] = json::array({code_to_json(v.witness->first), code_to_json(v.witness->second)});
        }
        std::cout << out.dump(2) << "\n";
    } else if (v.admits) {
        std::cout << "admits: the primal enumerator determines the dual enumerator at k = " << k << "\n";
    } else {
        std::cout << "counterexample: equal primal enumerators, different dual enumerators\n"
                  << code_to_json(v.witness->first).dump(2) << "\n"
                  << code_to_json(v.witness->second).dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_decompose(const Options& opt, const std::string& structure_path, const std::string& code_path) {
    LpbStructure s = lpb_from_json(load_json(structure_path));
    LinearCode code = code_from_json(load_json(code_path));
    CanonicalDecomposition dec = canonical_decompose(s, code);
    if (opt.format == "json")
        std::cout << json{{"isometry", matrix_to_json(dec.isometry.mat)}, {"code", code_to_json(dec.decomposed)}}
                         .dump(2)
                  << "\n";
    else
        std::cout << "isometry:\n"
                  << matrix_to_json(dec.isometry.mat)["entries"].dump() << "\n"
                  << "decomposed code:\n"
                  << code_to_json(dec.decomposed)["generator"].dump() << "\n";
    return kExitOk;
}

int cmd_reach(const Options& opt, const std::string& target_path, int depth) {
    SWeightTable target = weight_table_from_json(load_json(target_path));
    SWeightReport valid = validate_sweight(target);
    if (!valid.ok) throw DomainError("target is not an S-weight: " + valid.message);
    auto hit = reachability_search(ordering_of(target), depth, opt.caps);
    if (!hit) {
        if (opt.format == "json")
            std::cout << json{{"found", false}, {"depth", nullptr}}.dump(2) << "\n";
        else
            std::cout << "not reached within depth " << depth << "\n";
        return kExitOk;
    }
    const auto& [rep, cls] = *hit;
    if (opt.format == "json")
        std::cout << json{{"found", true},
                          {"depth", rep.found_depth[cls]},
                          {"derivation", derivation_to_json(rep, cls)}}
                         .dump(2)
                  << "\n";
    else
        std::cout << "reached at depth " << rep.found_depth[cls] << "\n"
                  << derivation_to_json(rep, cls).dump(2) << "\n";
    return kExitOk;
}

int cmd_criteria(const Options& opt, int n, int q, bool quotient) {
    FieldParams check(q);
    CriterionCatalog cat = enumerate_criteria_cached(n, q, quotient, opt.caps);
    if (opt.format == "json") {
        std::cout << catalog_to_json(cat).dump(2) << "\n";
    } else {
        std::cout << cat.size() << " classes\n";
        for (std::size_t i = 0; i < cat.size(); ++i) {
            json levels = ordering_to_json(cat.classes[i])["levels"];
            std::cout << "class " << i << ": " << levels.dump() << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"support-respecting weights over small finite vector spaces"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Options opt;
    long long cap_vectors = opt.caps.max_vectors, cap_gl = opt.caps.max_gl;
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--cap-vectors", cap_vectors, "vector enumeration cap");
    app.add_option("--cap-gl", cap_gl, "isometry enumeration cap");
    app.add_option("--cache-dir", opt.caps.cache_dir, "catalog cache directory");
    app.add_option("--seed", opt.caps.seed, "seed for randomized consistency passes");

    std::string structure_path, code_path, weight_path, vec;
    int k = 0, depth = 2, n = 2, q = 2;
    bool quotient = false;

    app.add_subcommand("table1", "regenerate the four-criteria family table for F_2^2");
    CLI::App* weight_cmd = app.add_subcommand("weight", "evaluate a weight on a vector");
    weight_cmd->add_option("structure", structure_path, "weight table or structure JSON")->required();
    weight_cmd->add_option("vector", vec, "vector digit string (coordinate 1 first)");
    CLI::App* standardize_cmd = app.add_subcommand("standardize", "compress a weight onto contiguous values");
    standardize_cmd->add_option("weight", weight_path, "weight table JSON")->required();
    CLI::App* classify_cmd = app.add_subcommand("classify", "test membership in the classical families");
    classify_cmd->add_option("weight", weight_path, "weight table JSON")->required();
    CLI::App* isometries_cmd = app.add_subcommand("isometries", "isometry group and its product decomposition");
    isometries_cmd->add_option("input", structure_path, "weight table or structure JSON")->required();
    CLI::App* enumerator_cmd = app.add_subcommand("enumerator", "weight enumerator of a code");
    enumerator_cmd->add_option("structure", structure_path, "structure JSON")->required();
    enumerator_cmd->add_option("code", code_path, "code JSON")->required();
    CLI::App* macwilliams_cmd = app.add_subcommand("macwilliams", "dual-determination verdict at dimension k");
    macwilliams_cmd->add_option("structure", structure_path, "structure JSON")->required();
    macwilliams_cmd->add_option("k", k, "code dimension")->required();
    CLI::App* decompose_cmd = app.add_subcommand("decompose", "canonical level decomposition of a code");
    decompose_cmd->add_option("structure", structure_path, "structure JSON")->required();
    decompose_cmd->add_option("code", code_path, "code JSON")->required();
    CLI::App* reach_cmd = app.add_subcommand("reach", "derive a criterion from poset and covering generators");
    reach_cmd->add_option("target", weight_path, "target weight table JSON")->required();
    reach_cmd->add_option("--depth", depth, "maximum number of conditional sums");
    CLI::App* criteria_cmd = app.add_subcommand("criteria", "enumerate all decoding criteria at (n, q)");
    criteria_cmd->add_option("n", n, "vector length")->required();
    criteria_cmd->add_option("q", q, "field size")->required();
    criteria_cmd->add_flag("--quotient", quotient, "identify criteria up to coordinate permutation");

    CLI11_PARSE(app, argc, argv);

    opt.caps.max_vectors = cap_vectors;
    opt.caps.max_gl = cap_gl;
    opt.caps.clamp();

    try {
        if (app.got_subcommand("table1")) return cmd_table1(opt);
        if (app.got_subcommand("weight")) return cmd_weight(opt, structure_path, vec);
        if (app.got_subcommand("standardize")) return cmd_standardize(opt, weight_path);
        if (app.got_subcommand("classify")) return cmd_classify(opt, weight_path);
        if (app.got_subcommand("isometries")) return cmd_isometries(opt, structure_path);
        if (app.got_subcommand("enumerator")) return cmd_enumerator(opt, structure_path, code_path);
        if (app.got_subcommand("macwilliams")) return cmd_macwilliams(opt, structure_path, k);
        if (app.got_subcommand("decompose")) return cmd_decompose(opt, structure_path, code_path);
        if (app.got_subcommand("reach")) return cmd_reach(opt, weight_path, depth);
        if (app.got_subcommand("criteria")) return cmd_criteria(opt, n, q, quotient);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
