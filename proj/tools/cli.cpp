#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

#include "cwp/json_io.hpp"

using namespace cwp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadInput = 2;

json load_input(const std::string& input) {
    if (input.empty()) throw std::invalid_argument("--input required");
    if (input[0] == '{' || input[0] == '[') return json::parse(input);
    if (input == "-") return json::parse(std::cin);
    std::ifstream f(input);
    if (!f) throw std::invalid_argument("cannot open " + input);
    return json::parse(f);
}

void emit(const json& j, int indent) { std::cout << j.dump(indent) << "\n"; }

// Exchange-matrix inputs may be a bare array of rows or a {"Z": rows} object.
ExchangeMatrix matrix_input(const std::string& input) {
    json j = load_input(input);
    if (j.is_object() && j.contains("Z")) return exchange_from_json(j.at("Z"));
    return exchange_from_json(j);
}

IdealTriangulation surface_for(const std::string& surface, const std::string& input) {
    if (!surface.empty()) return make_surface(surface);
    return triangulation_from_json(load_input(input));
}

json form_matrices_json(const std::vector<QMat>& basis) {
    json out = json::array();
    for (const auto& m : basis) out.push_back(qmat_to_json(m));
    return out;
}

struct VerifyStats {
    json reports = json::array();
    bool all_pass = true;

    void add(json r) {
        all_pass = all_pass && r.at("pass").get<bool>();
        reports.push_back(std::move(r));
    }
};

void run_corank(VerifyStats& st, const IdealTriangulation& t, const std::string& name,
                int random_words, int max_len, Rng& rng) {
    auto one = [&](const IdealTriangulation& cur, const std::vector<int>& word) {
        CorankReport rep = corank_check(cur);
        json witness = {{"rank", rep.rank}, {"corank", rep.corank}, {"punctures", rep.punctures}};
        st.add(report_json("corank", name, word, rep.agrees, witness));
    };
    one(t, {});
    for (int i = 0; i < random_words; ++i) {
        std::vector<int> w = random_flip_word(t, max_len, rng);
        IdealTriangulation cur = t;
        for (int e : w) cur = cur.flip(e, false);
        one(cur, w);
    }
}

void run_representative(VerifyStats& st, const IdealTriangulation& t, const std::string& name) {
    RepresentativeSubset r = find_representative(t);
    bool pass = static_cast<int>(r.edges.size()) == t.num_vertices() &&
                r.restricted_nondegenerate &&
                std::all_of(r.cycle_lengths.begin(), r.cycle_lengths.end(),
                            [](int c) { return c > 0 && c % 2 == 1; });
    json witness = {{"S", r.edges}, {"cycle_lengths", r.cycle_lengths}, {"R", r.complement}};
    st.add(report_json("representative", name, {}, pass, witness));
}

void run_shear_tau(VerifyStats& st, const IdealTriangulation& t, const std::string& name) {
    if (!t.classify().perfect) return;  // shear coordinates need a perfect triangulation
    st.add(report_json("shear-tau", name, {}, shear_tau_check(t)));
}

void run_thm34(VerifyStats& st, const IdealTriangulation& t, const std::string& name,
               int random_words, int max_len, Rng& rng) {
    for (int i = 0; i < random_words; ++i) {
        std::vector<int> w = random_flip_word(t, max_len, rng);
        st.add(report_json("thm34", name, w, thm34_check(t, w)));
    }
}

void run_pullback(VerifyStats& st, const ExchangeMatrix& Z, const std::string& name, int words,
                  int max_len, int trials, Rng& rng) {
    FormBasis fb = compatible_form_basis(Z);
    int n = Z.n();
    for (const QMat& omega : fb.basis) {
        for (int i = 0; i < words; ++i) {
            int len = static_cast<int>(rand_int(rng, 0, max_len));
            std::vector<int> w;
            for (int k = 0; k < len; ++k) w.push_back(static_cast<int>(rand_int(rng, 0, n - 1)));
            bool ok = pullback_verify(omega, Z, w, trials, rng);
            st.add(report_json("pullback", name, w, ok, {{"omega", qmat_to_json(omega)}}));
        }
    }
}

std::vector<std::string> pick_surfaces(const std::string& surface) {
    if (!surface.empty()) return {surface};
    return builder_names();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cluster-algebra and triangulated-surface toolkit"};
    app.require_subcommand(1);

    std::string input, surface, battery;
    std::vector<int> word;
    int trials = 5, max_len = 8, random_words = 10, json_indent = 2;
    unsigned long seed = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "input file path, inline JSON, or - for stdin");
        cmd->add_option("--json-indent", json_indent, "output indentation (-1 for compact)");
    };

    CLI::App* mutate = app.add_subcommand("mutate", "apply a mutation word to a seed");
    add_common(mutate);
    mutate->add_option("--word", word, "mutation indices, 0-based")->delimiter(',');

    CLI::App* zof = app.add_subcommand("z-of", "exchange matrix of a triangulation");
    add_common(zof);
    zof->add_option("--surface", surface, "builder surface name");

    CLI::App* flip = app.add_subcommand("flip", "apply a flip word, with Ptolemy label updates");
    add_common(flip);
    flip->add_option("--surface", surface, "builder surface name");
    flip->add_option("--word", word, "edge indices, 0-based")->delimiter(',');

    CLI::App* formb = app.add_subcommand("form-basis", "basis of compatible 2-forms for Z");
    add_common(formb);

    CLI::App* poisson = app.add_subcommand("poisson-solve", "basis of compatible Poisson brackets");
    add_common(poisson);
    poisson->add_option("--seed", seed, "random seed for the sampling stage");

    CLI::App* verify = app.add_subcommand("verify", "run a named verification battery");
    add_common(verify);
    verify->add_option("battery", battery, "corank|representative|shear-tau|thm34|pullback|all")
        ->required();
    verify->add_option("--surface", surface, "restrict to one builder surface");
    verify->add_option("--random-words", random_words, "random words per surface");
    verify->add_option("--max-len", max_len, "maximum word length");
    verify->add_option("--trials", trials, "evaluation points per pullback check");
    verify->add_option("--seed", seed, "random seed");

    CLI::App* builders = app.add_subcommand("builders", "list or emit the test surfaces");
    add_common(builders);
    builders->add_option("--surface", surface, "emit this surface as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (mutate->parsed()) {
            Seed s = seed_from_json(load_input(input));
            s = apply_word(s, word);
            emit(seed_to_json(s), json_indent);
            return kExitOk;
        }
        if (zof->parsed()) {
            IdealTriangulation t = surface_for(surface, input);
            json out = {{"Z", exchange_to_json(t.exchange_matrix())},
                        {"edge_names", t.edge_names()}};
            emit(out, json_indent);
            return kExitOk;
        }
        if (flip->parsed()) {
            IdealTriangulation t = surface_for(surface, input);
            FlipTrace tr = track_flips(t, word);
            json labels = json::array();
            for (const auto& f : tr.seed_vars) labels.push_back(rf_to_json(f));
            IdealTriangulation cur = t;
            for (int e : word) cur = cur.flip(e, false);
            json out = {{"labels", std::move(labels)},
                        {"inter", tr.inter},
                        {"delta", tr.delta},
                        {"Z", exchange_to_json(cur.exchange_matrix())},
                        {"triangulation", triangulation_to_json(cur)}};
            emit(out, json_indent);
            return kExitOk;
        }
        if (formb->parsed()) {
            ExchangeMatrix Z = matrix_input(input);
            FormBasis fb = compatible_form_basis(Z);
            json out = {{"basis", form_matrices_json(fb.basis)},
                        {"r", fb.r},
                        {"zero_blocks", fb.zero_blocks}};
            emit(out, json_indent);
            return kExitOk;
        }
        if (poisson->parsed()) {
            ExchangeMatrix Z = matrix_input(input);
            Rng rng(seed);
            std::vector<QMat> basis = solve_poisson_star(Z, rng);
            json out = {{"basis", form_matrices_json(basis)},
                        {"dimension", basis.size()}};
            emit(out, json_indent);
            return kExitOk;
        }
        if (builders->parsed()) {
            if (surface.empty()) {
                emit(json(builder_names()), json_indent);
            } else {
                emit(triangulation_to_json(make_surface(surface)), json_indent);
            }
            return kExitOk;
        }
        if (verify->parsed()) {
            Rng rng(seed);
            VerifyStats st;
            bool all = battery == "all";
            for (const std::string& name : pick_surfaces(surface)) {
                IdealTriangulation t = make_surface(name);
                if (all || battery == "corank") run_corank(st, t, name, random_words, max_len, rng);
                if (all || battery == "representative") run_representative(st, t, name);
                if (all || battery == "shear-tau") run_shear_tau(st, t, name);
                if (all || battery == "thm34")
                    run_thm34(st, t, name, random_words, std::min(max_len, 12), rng);
                if (all || battery == "pullback")
                    run_pullback(st, t.exchange_matrix(), name, std::min(random_words, 5),
                                 std::min(max_len, 4), trials, rng);
            }
            if (st.reports.empty()) throw std::invalid_argument("unknown battery: " + battery);
            emit(st.reports, json_indent);
            return st.all_pass ? kExitOk : kExitVerifyFail;
        }
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
