// Command-line front end: exact evaluation of the word/forest operations,
// mould arithmetic, and the named verification suites.

#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mouldcalc/arbomould.hpp"
#include "mouldcalc/forest.hpp"
#include "mouldcalc/mould.hpp"
#include "mouldcalc/qsym.hpp"
#include "mouldcalc/quasishuffle.hpp"
#include "mouldcalc/suites.hpp"
#include "mouldcalc/surjection.hpp"

namespace {

using namespace mouldcalc;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<Letter> parse_letters(const std::string& csv) {
    std::vector<Letter> out;
    std::stringstream ss(csv);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        if (piece.empty()) continue;
        long long v = std::stoll(piece);
        if (v <= 0) throw std::invalid_argument("letters must be positive integers");
        out.push_back(Letter{v});
    }
    if (out.empty()) throw std::invalid_argument("empty letter list");
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Builtin name or @file.json with a table.
Mould resolve_mould(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@')
        return mould_table_from_json(read_file(arg.substr(1)), arg.substr(1));
    return builtin_mould(arg);
}

// "X=3" declares the alphabet x1 < x2 < x3.
OrderedAlphabet alphabet_from_declaration(const std::string& decl) {
    auto eq = decl.find('=');
    if (eq == std::string::npos || eq == 0)
        throw std::invalid_argument("alphabet declaration must look like X=3");
    std::string prefix = decl.substr(0, eq);
    for (char& c : prefix) c = static_cast<char>(std::tolower(c));
    int n = std::stoi(decl.substr(eq + 1));
    if (n < 0 || n > 12) throw std::invalid_argument("alphabet size out of range");
    return OrderedAlphabet::atoms(prefix, n);
}

ArboMould resolve_arbomould(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@')
        return arbomould_table_from_json(read_file(arg.substr(1)), arg.substr(1));
    if (arg.size() > 2 && arg.substr(arg.size() - 2) == "_<")
        return arborify_mould(builtin_mould(arg.substr(0, arg.size() - 2)));
    return arbo_builtin(arg);
}

nlohmann::ordered_json lc_json(const WordLC& a) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [w, c] : a) terms.push_back({{"basis", w.text()}, {"coeff", c.text()}});
    return {{"terms", std::move(terms)}};
}

nlohmann::ordered_json tensor_json(const WordTensor& t) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [p, c] : t)
        terms.push_back({{"basis", p.first.text() + "(x)" + p.second.text()},
                         {"coeff", c.text()}});
    return {{"terms", std::move(terms)}};
}

nlohmann::ordered_json forest_lc_json(const ForestLC& a) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [f, c] : a) terms.push_back({{"basis", f.text()}, {"coeff", c.text()}});
    return {{"terms", std::move(terms)}};
}

nlohmann::ordered_json forest_tensor_json(const ForestTensor& t) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [p, c] : t)
        terms.push_back({{"basis", p.first.text() + "(x)" + p.second.text()},
                         {"coeff", c.text()}});
    return {{"terms", std::move(terms)}};
}

int run_eval(const std::vector<std::string>& tokens, bool as_json) {
    if (tokens.empty()) throw std::invalid_argument("eval: missing operator");
    const std::string& op = tokens[0];
    auto want = [&](std::size_t n) {
        if (tokens.size() != n + 1)
            throw std::invalid_argument("eval " + op + ": expected " + std::to_string(n) +
                                        " argument(s)");
    };
    auto emit_lc = [&](const WordLC& a) {
        if (as_json)
            std::cout << lc_json(a).dump() << "\n";
        else
            std::cout << word_lc_text(a) << "\n";
    };
    auto emit_tensor = [&](const WordTensor& t) {
        if (as_json)
            std::cout << tensor_json(t).dump() << "\n";
        else
            std::cout << word_tensor_text(t) << "\n";
    };
    auto emit_forest_lc = [&](const ForestLC& a) {
        if (as_json)
            std::cout << forest_lc_json(a).dump() << "\n";
        else
            std::cout << forest_lc_text(a) << "\n";
    };

    if (op == "qsh") {
        want(2);
        emit_lc(qsh(Word::parse(tokens[1]), Word::parse(tokens[2])));
    } else if (op == "shuffle") {
        want(2);
        emit_lc(shuffle(Word::parse(tokens[1]), Word::parse(tokens[2])));
    } else if (op == "concat") {
        want(2);
        Word w = concat(Word::parse(tokens[1]), Word::parse(tokens[2]));
        if (as_json)
            std::cout << nlohmann::ordered_json({{"word", w.text()}}).dump() << "\n";
        else
            std::cout << w.text() << "\n";
    } else if (op == "delta") {
        want(1);
        emit_tensor(deconcat(Word::parse(tokens[1])));
    } else if (op == "gamma") {
        want(1);
        emit_tensor(gamma(Word::parse(tokens[1])));
    } else if (op == "antipode") {
        want(1);
        emit_lc(antipode(Word::parse(tokens[1])));
    } else if (op == "weight") {
        want(1);
        std::cout << letter_text(Word::parse(tokens[1]).weight()) << "\n";
    } else if (op.rfind("mould(", 0) == 0 && op.back() == ')') {
        want(1);
        Mould m = resolve_mould(op.substr(6, op.size() - 7));
        Rational v = m.eval(Word::parse(tokens[1]));
        if (as_json)
            std::cout << nlohmann::ordered_json({{"value", v.text()}}).dump() << "\n";
        else
            std::cout << v.text() << "\n";
    } else if (op == "arborify") {
        want(1);
        emit_lc(arborify(Forest::parse(tokens[1])));
    } else if (op == "arborify0") {
        want(1);
        emit_lc(arborify_simple(Forest::parse(tokens[1])));
    } else if (op == "forest-delta") {
        want(1);
        ForestTensor t = forest_delta(Forest::parse(tokens[1]));
        if (as_json)
            std::cout << forest_tensor_json(t).dump() << "\n";
        else
            std::cout << forest_tensor_text(t) << "\n";
    } else if (op == "forest-gamma") {
        want(1);
        ForestTensor t = forest_gamma(Forest::parse(tokens[1]));
        if (as_json)
            std::cout << forest_tensor_json(t).dump() << "\n";
        else
            std::cout << forest_tensor_text(t) << "\n";
    } else if (op == "forest-antipode") {
        want(1);
        emit_forest_lc(forest_antipode(Forest::parse(tokens[1])));
    } else if (op == "aut") {
        want(1);
        std::cout << aut(Forest::parse(tokens[1])) << "\n";
    } else if (op == "gl") {
        want(2);
        emit_forest_lc(gl_product(Forest::parse(tokens[1]), Forest::parse(tokens[2])));
    } else if (op == "graft") {
        want(2);
        Forest s = Forest::parse(tokens[1]);
        Forest t = Forest::parse(tokens[2]);
        if (s.trees.size() != 1 || t.trees.size() != 1)
            throw std::invalid_argument("eval graft: both arguments must be single trees");
        ForestLC out;
        for (const auto& [tt, c] : graft(s.trees[0], t.trees[0]))
            out.add_term(Forest::single(tt), c);
        emit_forest_lc(out);
    } else {
        throw std::invalid_argument("eval: unknown operator '" + op + "'");
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact quasi-shuffle, mould and arborification calculator"};
    app.require_subcommand(1);

    // ---- eval ----
    // tokens are collected raw from the remaining arguments; an option of
    // vector type would re-tokenize "[1.2]" as a bracketed container
    auto* eval = app.add_subcommand("eval", "Evaluate an expression exactly");
    bool eval_json = false;
    eval->add_flag("--json", eval_json, "emit JSON instead of text");
    eval->allow_extras(true);
    eval->positionals_at_end(false);

    // ---- check ----
    auto* check = app.add_subcommand("check", "Run a named verification suite");
    std::string suite = "all";
    Bounds bounds;
    std::string letters_csv = "1,2,3", forest_letters_csv = "1,2";
    std::uint64_t seed = 0;
    check->add_option("--suite", suite, "suite name or 'all'");
    check->add_option("--max-len", bounds.max_len, "word length bound");
    check->add_option("--max-weight", bounds.max_weight, "weight bound for the generator");
    check->add_option("--growth-weight", bounds.growth_weight, "weight bound for growth audits");
    check->add_option("--max-vertices", bounds.max_vertices, "forest vertex bound");
    check->add_option("--letters", letters_csv, "comma separated word letters");
    check->add_option("--forest-letters", forest_letters_csv, "comma separated decorations");
    check->add_option("--seed", seed, "seed for the randomized sweeps");
    check->add_option("--pair-total", bounds.pair_total, "length bound |u|+|v| for pair laws");
    check->add_option("--seeds", bounds.num_seeds, "number of random-mould repetitions");

    // ---- mould ----
    auto* mould_cmd = app.add_subcommand("mould", "Operations on moulds");
    mould_cmd->require_subcommand(1);
    std::string m_name, m_other, m_word, m_c = "1", m_kappa = "1";
    long long m_weight = 6;
    int m_len = 3;
    std::string m_letters = "1,2";
    std::uint64_t m_seed = 0;
    bool m_json = false;

    auto* m_eval = mould_cmd->add_subcommand("eval", "Evaluate a mould on a word");
    m_eval->add_option("mould", m_name)->required();
    m_eval->add_option("word", m_word)->required();
    auto* m_mul = mould_cmd->add_subcommand("mul", "Product of two moulds on a word");
    auto* m_comp = mould_cmd->add_subcommand("comp", "Composition of two moulds on a word");
    auto* m_dia = mould_cmd->add_subcommand("diamond", "Diamond composition on a word");
    for (auto* sc : {m_mul, m_comp, m_dia}) {
        sc->add_option("left", m_name)->required();
        sc->add_option("right", m_other)->required();
        sc->add_option("word", m_word)->required();
    }
    auto* m_symel = mould_cmd->add_subcommand("check-symmetrel",
                                              "Multiplicativity for the quasi-shuffle");
    auto* m_symal = mould_cmd->add_subcommand("check-symmetral",
                                              "Multiplicativity for the shuffle");
    for (auto* sc : {m_symel, m_symal}) {
        sc->add_option("mould", m_name)->required();
        sc->add_option("--max-len", m_len);
        sc->add_option("--letters", m_letters);
    }
    auto* m_gen = mould_cmd->add_subcommand("gen-symmetrel",
                                            "Generate a certified symmetrel mould");
    m_gen->add_option("--seed", m_seed);
    m_gen->add_option("--max-weight", m_weight);
    m_gen->add_flag("--json", m_json);
    auto* m_growth = mould_cmd->add_subcommand("growth-audit", "Exact geometric growth check");
    m_growth->add_option("mould", m_name)->required();
    m_growth->add_option("--C", m_c);
    m_growth->add_option("--kappa", m_kappa);
    m_growth->add_option("--max-weight", m_weight);

    // ---- arbomould ----
    auto* arbo_cmd = app.add_subcommand("arbomould", "Operations on arborescent moulds");
    arbo_cmd->require_subcommand(1);
    std::string a_name, a_other, a_forest;
    int a_vertices = 4;
    std::string a_letters = "1,2";
    std::string a_suite = "arbomould-algebra";
    std::uint64_t a_seed = 0;

    auto* a_eval = arbo_cmd->add_subcommand("eval", "Evaluate an arborescent mould");
    a_eval->add_option("mould", a_name)->required();
    a_eval->add_option("forest", a_forest)->required();
    auto* a_mul = arbo_cmd->add_subcommand("mul", "Product on a forest");
    auto* a_comp = arbo_cmd->add_subcommand("comp", "Composition on a forest");
    auto* a_dia = arbo_cmd->add_subcommand("diamond", "Diamond composition on a forest");
    for (auto* sc : {a_mul, a_comp, a_dia}) {
        sc->add_option("left", a_name)->required();
        sc->add_option("right", a_other)->required();
        sc->add_option("forest", a_forest)->required();
    }
    auto* a_arbo = arbo_cmd->add_subcommand("arborify",
                                            "Evaluate the arborification of a word mould");
    a_arbo->add_option("mould", a_name)->required();
    a_arbo->add_option("forest", a_forest)->required();
    auto* a_check = arbo_cmd->add_subcommand("check", "Run a forest-level suite");
    a_check->add_option("--suite", a_suite);
    a_check->add_option("--max-vertices", a_vertices);
    a_check->add_option("--letters", a_letters);
    a_check->add_option("--seed", a_seed);

    // ---- qsym ----
    auto* qsym_cmd = app.add_subcommand("qsym", "Quasi-symmetric polynomial realization");
    qsym_cmd->require_subcommand(1);
    std::string q_word, q_u, q_v;
    std::vector<std::string> q_alphabets;
    auto* q_eval = qsym_cmd->add_subcommand("eval", "Expand a basis function over an alphabet");
    q_eval->add_option("word", q_word)->required();
    q_eval->add_option("--alphabet", q_alphabets, "alphabet size, e.g. X=3")->required();
    auto* q_prod = qsym_cmd->add_subcommand("product-check",
                                            "Q_u Q_v against the quasi-shuffle expansion");
    q_prod->add_option("u", q_u)->required();
    q_prod->add_option("v", q_v)->required();
    q_prod->add_option("--alphabet", q_alphabets)->required();
    auto* q_sum = qsym_cmd->add_subcommand("sum-check",
                                           "ordinal sum against the deconcatenation");
    auto* q_lex = qsym_cmd->add_subcommand("lex-check",
                                           "lexicographic product against the internal coproduct");
    for (auto* sc : {q_sum, q_lex}) {
        sc->add_option("word", q_word)->required();
        sc->add_option("--alphabet", q_alphabets, "two declarations, e.g. X=3 Y=3")->required();
    }

    // ---- surj ----
    auto* surj_cmd = app.add_subcommand("surj", "Packed words and weak quasi-shuffles");
    surj_cmd->require_subcommand(1);
    std::string s_word, s_phi;
    int s_p = 0, s_q = 0, s_r = -1;
    auto* s_std = surj_cmd->add_subcommand("std", "Standardization of a word");
    s_std->add_option("word", s_word)->required();
    auto* s_fact = surj_cmd->add_subcommand("factorize",
                                            "Factor a weak quasi-shuffle as delta . sigma");
    s_fact->add_option("phi", s_phi)->required();
    auto* s_fiber = surj_cmd->add_subcommand("fiber",
                                             "Quasi-shuffles a weak quasi-shuffle factors through");
    s_fiber->add_option("phi", s_phi)->required();
    auto* s_enum = surj_cmd->add_subcommand("enum-qsh", "List (p,q)-quasi-shuffles");
    s_enum->add_option("p", s_p)->required();
    s_enum->add_option("q", s_q)->required();
    s_enum->add_option("r", s_r);
    auto* s_wenum = surj_cmd->add_subcommand("enum-wqsh", "List weak (p,q)-quasi-shuffles");
    s_wenum->add_option("p", s_p)->required();
    s_wenum->add_option("q", s_q)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (eval->parsed()) return run_eval(eval->remaining(), eval_json);

        if (check->parsed()) {
            bounds.letters = parse_letters(letters_csv);
            bounds.forest_letters = parse_letters(forest_letters_csv);
            std::vector<SuiteReport> reports;
            for (const std::string& name :
                 suite == "all" ? suite_names() : std::vector<std::string>{suite}) {
                auto t0 = std::chrono::steady_clock::now();
                reports.push_back(run_suite(name, bounds, seed));
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
                std::cerr << "suite " << name << " finished in " << ms << " ms\n";
            }
            std::cout << render_reports(reports);
            for (const auto& r : reports)
                if (!r.ok()) return kExitFail;
            return kExitPass;
        }

        if (mould_cmd->parsed()) {
            if (m_eval->parsed()) {
                std::cout << resolve_mould(m_name).eval(Word::parse(m_word)).text() << "\n";
            } else if (m_mul->parsed() || m_comp->parsed() || m_dia->parsed()) {
                Mould left = resolve_mould(m_name), right = resolve_mould(m_other);
                Mould combined = m_mul->parsed()    ? mould_mul(left, right)
                                 : m_comp->parsed() ? mould_comp(left, right)
                                                    : mould_diamond(left, right);
                std::cout << combined.eval(Word::parse(m_word)).text() << "\n";
            } else if (m_symel->parsed() || m_symal->parsed()) {
                Mould m = resolve_mould(m_name);
                MouldCheck c = m_symel->parsed()
                                   ? is_symmetrel(m, m_len, parse_letters(m_letters))
                                   : is_symmetral(m, m_len, parse_letters(m_letters));
                std::cout << (c.ok ? "yes" : "no: " + c.detail) << "\n";
            } else if (m_gen->parsed()) {
                Mould g = gen_symmetrel(m_seed, m_weight);
                if (m_json) {
                    std::cout << mould_values_json(g, words_up_to_weight(m_weight)) << "\n";
                } else {
                    for (const Word& w : words_up_to_weight(m_weight))
                        std::cout << w.text() << " -> " << g.eval(w).text() << "\n";
                }
            } else if (m_growth->parsed()) {
                MouldCheck c = growth_audit(resolve_mould(m_name), Rational::parse(m_c),
                                            Rational::parse(m_kappa), m_weight);
                std::cout << (c.ok ? "within bound" : "exceeds bound: " + c.detail) << "\n";
            }
            return kExitPass;
        }

        if (arbo_cmd->parsed()) {
            if (a_eval->parsed()) {
                std::cout << resolve_arbomould(a_name).eval(Forest::parse(a_forest)).text()
                          << "\n";
            } else if (a_mul->parsed() || a_comp->parsed() || a_dia->parsed()) {
                ArboMould left = resolve_arbomould(a_name);
                ArboMould right = resolve_arbomould(a_other);
                ArboMould combined = a_mul->parsed()    ? arbo_mul(left, right)
                                     : a_comp->parsed() ? arbo_comp(left, right)
                                                        : arbo_diamond(left, right);
                std::cout << combined.eval(Forest::parse(a_forest)).text() << "\n";
            } else if (a_arbo->parsed()) {
                ArboMould m = arborify_mould(resolve_mould(a_name));
                std::cout << m.eval(Forest::parse(a_forest)).text() << "\n";
            } else if (a_check->parsed()) {
                Bounds ab;
                ab.max_vertices = a_vertices;
                ab.forest_letters = parse_letters(a_letters);
                SuiteReport rep = run_suite(a_suite, ab, a_seed);
                std::cout << rep.render();
                return rep.ok() ? kExitPass : kExitFail;
            }
            return kExitPass;
        }

        if (qsym_cmd->parsed()) {
            std::vector<OrderedAlphabet> alphabets;
            for (const std::string& s : q_alphabets) alphabets.push_back(alphabet_from_declaration(s));
            if (q_eval->parsed()) {
                std::cout << polynomial_text(q_function(Word::parse(q_word), alphabets.at(0)))
                          << "\n";
            } else if (q_prod->parsed()) {
                bool ok = q_product_check(Word::parse(q_u), Word::parse(q_v), alphabets.at(0));
                std::cout << (ok ? "equal" : "DIFFER") << "\n";
                return ok ? kExitPass : kExitFail;
            } else if (q_sum->parsed() || q_lex->parsed()) {
                if (alphabets.size() != 2)
                    throw std::invalid_argument("need exactly two --alphabet declarations");
                Word w = Word::parse(q_word);
                bool ok = q_sum->parsed() ? q_sum_check(w, alphabets[0], alphabets[1])
                                          : q_lex_product_check(w, alphabets[0], alphabets[1]);
                std::cout << (ok ? "equal" : "DIFFER") << "\n";
                return ok ? kExitPass : kExitFail;
            }
            return kExitPass;
        }

        if (surj_cmd->parsed()) {
            if (s_std->parsed()) {
                std::vector<long long> values;
                for (char c : s_word) {
                    if (c >= '1' && c <= '9')
                        values.push_back(c - '0');
                    else if (c >= 'A' && c <= 'Z')
                        values.push_back(c - 'A' + 10);
                    else
                        throw std::invalid_argument("std: bad symbol in word");
                }
                std::cout << standardize(values).text() << "\n";
            } else if (s_fact->parsed()) {
                WqshFactorization f = factorize_wqsh(SplitSurjection::parse(s_phi));
                std::cout << "delta = " << f.delta.text() << "\n";
                std::cout << "sigma = " << f.sigma.text() << "\n";
            } else if (s_fiber->parsed()) {
                auto fiber = fiber_qsh(SplitSurjection::parse(s_phi));
                std::size_t width = 3;
                for (const auto& [eta, sig] : fiber) width = std::max(width, eta.text().size());
                std::cout << "eta";
                for (std::size_t i = 3; i < width + 3; ++i) std::cout << ' ';
                std::cout << "sigma[eta]\n";
                for (const auto& [eta, sig] : fiber) {
                    std::string e = eta.text();
                    std::cout << e;
                    for (std::size_t i = e.size(); i < width + 3; ++i) std::cout << ' ';
                    std::cout << sig.text() << "\n";
                }
                std::cout << "total: " << fiber.size() << "\n";
            } else if (s_enum->parsed()) {
                auto list = s_r >= 0 ? enumerate_qsh(s_p, s_q, s_r) : enumerate_qsh(s_p, s_q);
                for (const auto& s : list) std::cout << s.text() << "\n";
                std::cout << "total: " << list.size() << "\n";
            } else if (s_wenum->parsed()) {
                auto list = enumerate_wqsh(s_p, s_q);
                for (const auto& s : list) std::cout << s.text() << "\n";
                std::cout << "total: " << list.size() << "\n";
            }
            return kExitPass;
        }
    } catch (const SuiteBoundsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitPass;
}
