// Command-line frontend: exact construction and verification of Leibniz
// algebras on the Witt algebra, classification solving, coefficient queries,
// and window-scale cohomology reports.

#include "wittleib/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace wittleib;

IndexWindow parse_window(const std::string& text) {
    auto pos = text.find("..");
    if (pos == std::string::npos)
        throw parse_error("window must be of the form lo..hi");
    try {
        Index lo = std::stoll(text.substr(0, pos));
        Index hi = std::stoll(text.substr(pos + 2));
        return IndexWindow(lo, hi);
    } catch (const std::invalid_argument&) {
        throw parse_error("window bounds must be integers");
    } catch (const std::out_of_range&) {
        throw parse_error("window bounds out of range");
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n')
            std::cout << '\n';
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os)
        throw std::runtime_error("cannot open output file " + out_path);
    os << text;
    if (text.empty() || text.back() != '\n')
        os << '\n';
}

// defaults: beta is forced for II/III/IV when not given
Scalar default_beta(FamilyId f, const std::optional<std::string>& beta) {
    if (beta)
        return parse_scalar(*beta);
    switch (f) {
        case FamilyId::ii: return Scalar(3);
        case FamilyId::iii: return Scalar(1);
        case FamilyId::iv: return Scalar(-1);
        default:
            throw parse_error("--beta is required for families thm1 and I");
    }
}

struct Cli {
    int run(int argc, char** argv) {
        CLI::App app{"exact Leibniz algebras over the Witt algebra"};
        app.require_subcommand(1);

        // ---- table ----
        auto* table = app.add_subcommand("table", "emit multiplication table records");
        table->add_option("--family", family_)->required();
        table->add_option("--alpha", alpha_)->required();
        table->add_option("--beta", beta_);
        table->add_option("--normalization", normalization_);
        table->add_option("--window", window_)->required();
        table->add_option("--format", format_)->check(CLI::IsMember({"json", "csv", "latex"}));
        table->add_option("--out", out_);
        table->callback([&] { code_ = cmd_table(); });

        // ---- verify ----
        auto* verify = app.add_subcommand("verify", "exhaustive Leibniz identity sweep");
        verify->add_option("--family", family_)->required();
        verify->add_option("--alpha", alpha_)->required();
        verify->add_option("--beta", beta_);
        verify->add_option("--normalization", normalization_);
        verify->add_option("--window", window_)->required();
        verify->add_option("--kinds", kinds_, "comma-separated subset of ddd..vvv");
        verify->add_option("--out", out_);
        verify->callback([&] { code_ = cmd_verify(); });

        // ---- module-check ----
        auto* mc = app.add_subcommand("module-check", "right-module axiom sweep");
        mc->add_option("--alpha", alpha_)->required();
        mc->add_option("--beta", beta_)->required();
        mc->add_option("--window", window_)->required();
        mc->add_option("--out", out_);
        mc->callback([&] { code_ = cmd_module_check(); });

        // ---- solve ----
        auto* solve = app.add_subcommand("solve", "classification constraint solver");
        solve->add_option("--mode", mode_)->check(CLI::IsMember({"reduced", "full"}));
        solve->add_option("--alpha", alpha_);
        solve->add_option("--beta", beta_)->required();
        solve->add_option("--window", window_)->required();
        solve->add_option("--module-window", module_window_);
        solve->add_option("--gauge", gauge_)->check(CLI::IsMember({"fixed", "quotient"}));
        solve->add_option("--out", out_);
        solve->callback([&] { code_ = cmd_solve(); });

        // ---- coeff ----
        auto* coeff = app.add_subcommand("coeff", "query a_i / b_{i,j} coefficients");
        coeff->add_option("--family", family_);
        coeff->add_option("--a", a_index_, "index i of a_i");
        coeff->add_option("--b", b_index_, "indices i j of b_{i,j}")->expected(2);
        coeff->add_option("--out", out_);
        coeff->callback([&] { code_ = cmd_coeff(); });

        // ---- cohomology ----
        auto* coh = app.add_subcommand("cohomology", "graded adjoint cohomology dimensions");
        coh->add_option("--degree", degree_)->required()->check(CLI::IsMember({1, 2}));
        coh->add_option("--weight", weight_)->required();
        coh->add_option("--window", window_)->required();
        coh->add_option("--out", out_);
        coh->callback([&] { code_ = cmd_cohomology(); });

        // ---- reducible ----
        auto* red = app.add_subcommand("reducible", "module reducibility criterion");
        red->add_option("--alpha", alpha_)->required();
        red->add_option("--beta", beta_)->required();
        red->add_option("--out", out_);
        red->callback([&] { code_ = cmd_reducible(); });

        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            int r = app.exit(e);
            return r == 0 ? 0 : 2;
        } catch (const parse_error& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 2;
        } catch (const contract_error& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 2;
        } catch (const domain_error& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 2;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 2;
        }
        return code_;
    }

  private:
    StructureTable make_table() const {
        FamilyId fam = family_from_string(family_);
        ModuleParams p(parse_scalar(alpha_), default_beta(fam, beta_));
        Scalar norm = normalization_ ? parse_scalar(*normalization_) : Scalar(1);
        return build_table(fam, p, norm);
    }

    int cmd_table() const {
        StructureTable t = make_table();
        auto recs = table_records(t, parse_window(window_));
        if (format_ == "csv")
            emit(to_csv(recs), out_);
        else if (format_ == "latex")
            emit(to_latex(recs), out_);
        else
            emit(records_json(recs).dump(2), out_);
        return 0;
    }

    int cmd_verify() const {
        StructureTable t = make_table();
        std::vector<TripleKind> kinds;
        if (kinds_.empty()) {
            kinds = all_triple_kinds();
        } else {
            std::stringstream ss(kinds_);
            std::string item;
            while (std::getline(ss, item, ','))
                kinds.push_back(triple_kind_from_string(item));
        }
        VerificationReport rep = verify_window(t, parse_window(window_), kinds);
        emit(report_json(rep, table_descriptor(t)).dump(2), out_);
        return rep.clean() ? 0 : 1;
    }

    int cmd_module_check() const {
        ModuleParams p(parse_scalar(alpha_), parse_scalar(*beta_));
        VerificationReport rep = verify_module_axiom(p, parse_window(window_));
        emit(report_json(rep).dump(2), out_);
        return rep.clean() ? 0 : 1;
    }

    int cmd_solve() const {
        IndexWindow w = parse_window(window_);
        if (mode_ == "full") {
            if (alpha_.empty())
                throw parse_error("full mode requires --alpha");
            if (gauge_ == "fixed")
                throw parse_error("full mode always quotients by the gauge subspace");
            IndexWindow kv = module_window_.empty() ? IndexWindow(2 * w.lo, 2 * w.hi)
                                                    : parse_window(module_window_);
            ModuleParams p(parse_scalar(alpha_), parse_scalar(*beta_));
            GammaSystem sys = build_full_system(p, w, kv);
            SolutionSpace sol = solve(sys);
            GaugeSubspace gauge = gauge_subspace(p, sys);
            emit(solver_json(sys, sol, gauge_dimension(gauge), quotient_dimension(sol, gauge))
                     .dump(2),
                 out_);
            return 0;
        }
        if (gauge_ == "quotient")
            throw parse_error("reduced mode uses the gauge-fixed normalization");
        GammaSystem sys = build_reduced_system(parse_scalar(*beta_), w);
        if (!alpha_.empty())
            sys.alpha = parse_scalar(alpha_);
        SolutionSpace sol = solve(sys);
        // gauge is fixed by normalization rows, so the moduli count is the nullity
        emit(solver_json(sys, sol, 0, sol.nullity).dump(2), out_);
        return 0;
    }

    int cmd_coeff() const {
        if (a_index_) {
            emit(to_string(a_coeff(*a_index_)), out_);
            return 0;
        }
        if (b_index_.size() == 2) {
            FamilyId fam = family_from_string(family_);
            if (fam == FamilyId::ii) {
                CoefficientTable t(FamilyId::ii, Scalar(3));
                emit(to_string(b_coeff_ii(t, b_index_[0], b_index_[1])), out_);
                return 0;
            }
            if (fam == FamilyId::iv) {
                CoefficientTable t(FamilyId::iv, Scalar(-1));
                emit(to_string(b_coeff_iv(t, b_index_[0], b_index_[1])), out_);
                return 0;
            }
            throw parse_error("--b requires --family II or IV");
        }
        throw parse_error("coeff requires --a i or --b i j");
    }

    int cmd_cohomology() const {
        IndexWindow w = parse_window(window_);
        CohomologyReport rep = degree_ == 1 ? graded_h1(weight_, w) : graded_h2(weight_, w);
        emit(cohomology_json(rep).dump(2), out_);
        return 0;
    }

    int cmd_reducible() const {
        ModuleParams p(parse_scalar(alpha_), parse_scalar(*beta_));
        json j{{"alpha", to_string(p.alpha)},
               {"beta", to_string(p.beta)},
               {"reducible", is_reducible(p)}};
        emit(j.dump(2), out_);
        return 0;
    }

    std::string family_;
    std::string alpha_;
    std::optional<std::string> beta_;
    std::optional<std::string> normalization_;
    std::string window_;
    std::string module_window_;
    std::string kinds_;
    std::string format_ = "json";
    std::string mode_ = "reduced";
    std::string gauge_;
    std::string out_;
    std::optional<Index> a_index_;
    std::vector<Index> b_index_;
    int degree_ = 1;
    Index weight_ = 0;
    int code_ = 0;
};

}  // namespace

int main(int argc, char** argv) {
    Cli cli;
    return cli.run(argc, argv);
}
