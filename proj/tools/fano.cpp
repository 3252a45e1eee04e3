// Command-line front end: corpus classification, single-polytope checks, and
// corpus utilities. Exit codes: 0 = success / all checks pass, 1 = a checked
// condition fails or a counterexample is found, 2 = input or usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fano/classify.hpp"
#include "fano/ewald.hpp"
#include "fano/matroid.hpp"
#include "fano/monotone.hpp"
#include "fano/polytope.hpp"
#include "fano/tu.hpp"

namespace {

using fano::CorpusEntry;
using fano::Int;
using fano::IntMatrix;
using fano::LatticePolytope;

CorpusEntry find_entry(const std::vector<CorpusEntry>& corpus, const std::string& id) {
    for (const auto& e : corpus)
        if (e.id == id) return e;
    throw std::runtime_error("no corpus entry with id '" + id + "'");
}

nlohmann::json matrix_json(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).convert_to<long long>());
        rows.push_back(row);
    }
    return rows;
}

void write_output(const std::string& out, const std::string& text) {
    if (out == "-" || out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open output file " + out);
    f << text;
}

std::string flag_str(const std::optional<bool>& f) {
    if (!f) return "unknown";
    return *f ? "true" : "false";
}

int run_classify(const std::string& corpus_file, const std::string& format, const std::string& out,
                 std::size_t jobs, int max_dim) {
    auto corpus = fano::load_corpus(corpus_file);
    fano::ClassifyOptions opts;
    opts.jobs = jobs;
    opts.max_dim = max_dim;
    auto summary = fano::classify_corpus(corpus, opts);
    write_output(out, fano::format_table(summary, format));
    return 0;
}

int run_verify(const std::string& corpus_file, const std::string& id) {
    auto corpus = fano::load_corpus(corpus_file);
    auto entry = find_entry(corpus, id);
    auto rec = fano::classify_polytope(entry);
    std::cout << "id:            " << rec.id << "\n";
    std::cout << "dim:           " << rec.dim << "\n";
    std::cout << "smooth_fano:   " << flag_str(rec.flags.smooth_fano) << "\n";
    std::cout << "usfp:          " << flag_str(rec.flags.usfp) << "\n";
    std::cout << "sfpdg:         " << flag_str(rec.flags.sfpdg) << "\n";
    std::cout << "dual_ut_free:  " << flag_str(rec.flags.dual_ut_free) << "\n";
    std::cout << "dual_dmp:      " << flag_str(rec.flags.dual_dmp) << "\n";
    if (rec.sfpdg_witness) {
        std::cout << "sfpdg witness: digraph on " << rec.sfpdg_witness->vertex_count
                  << " nodes, arrows";
        for (auto [a, b] : rec.sfpdg_witness->arrows) std::cout << " (" << a << "," << b << ")";
        std::cout << "\n";
    }
    for (const auto& note : rec.notes) std::cout << "note:          " << note << "\n";
    return rec.flags.smooth_fano.value_or(false) ? 0 : 1;
}

int run_ewald(const std::string& corpus_file, const std::string& id, const std::string& condition,
              bool witness) {
    auto corpus = fano::load_corpus(corpus_file);
    auto entry = find_entry(corpus, id);
    LatticePolytope p(entry.vertices);
    if (condition == "weak") {
        auto w = fano::weak_ewald(p);
        std::cout << id << ": weak Ewald " << (w ? "holds" : "fails") << "\n";
        if (w && witness) {
            std::cout << "basis:\n";
            for (const auto& row : w->basis) {
                for (const auto& c : row) std::cout << " " << c;
                std::cout << "\n";
            }
        }
        return w ? 0 : 1;
    }
    if (condition == "strong") {
        auto r = fano::strong_ewald(p);
        std::cout << id << ": strong Ewald " << (r.ok() ? "holds" : "fails") << "\n";
        if (!r.ok())
            std::cout << "failing vertex index: " << *r.failure_vertex << "\n";
        else if (witness)
            for (const auto& w : r.witnesses) {
                std::cout << "vertex " << w.vertex_index << " basis:\n";
                for (const auto& row : w.basis) {
                    for (const auto& c : row) std::cout << " " << c;
                    std::cout << "\n";
                }
            }
        return r.ok() ? 0 : 1;
    }
    if (condition == "star") {
        auto r = fano::star_ewald(p);
        std::cout << id << ": star Ewald " << (r.ok() ? "holds" : "fails") << "\n";
        if (!r.ok()) {
            std::cout << "failing dual face vertices:";
            for (auto v : r.failure_face->vertex_indices) std::cout << " " << v;
            std::cout << "\n";
        } else if (witness) {
            for (const auto& w : r.witnesses) {
                std::cout << "face {";
                for (auto v : w.face->vertex_indices) std::cout << " " << v;
                std::cout << " } lambda:";
                for (const auto& c : w.lambda) std::cout << " " << c;
                std::cout << "\n";
            }
        }
        return r.ok() ? 0 : 1;
    }
    std::cerr << "fano: --condition must be weak, strong, or star\n";
    return 2;
}

int run_dual(const std::string& corpus_file, const std::string& id) {
    auto corpus = fano::load_corpus(corpus_file);
    auto entry = find_entry(corpus, id);
    LatticePolytope p(entry.vertices);
    auto q = fano::dual_polytope(p);
    nlohmann::json rec;
    rec["id"] = id + ".dual";
    rec["dim"] = entry.dim;
    rec["vertices"] = matrix_json(q.vertices());
    std::cout << rec.dump() << "\n";
    return 0;
}

int run_standard_form(const std::string& corpus_file, const std::string& id, std::size_t facet) {
    auto corpus = fano::load_corpus(corpus_file);
    auto entry = find_entry(corpus, id);
    LatticePolytope p(entry.vertices);
    if (facet >= p.facets().size()) {
        std::cerr << "fano: facet index " << facet << " out of range (" << p.facets().size()
                  << " facets)\n";
        return 2;
    }
    auto m = fano::standard_form(p, facet);
    std::cout << m.to_string() << "\n";
    auto tu = fano::is_totally_unimodular(m);
    std::cout << "totally unimodular: " << (tu.is_tu ? "true" : "false") << "\n";
    return 0;
}

int run_gen2(const std::string& out) {
    auto corpus = fano::generate_dim2_corpus();
    write_output(out, fano::corpus_jsonl(corpus));
    return 0;
}

int run_check_inclusions(const std::string& corpus_file) {
    auto corpus = fano::load_corpus(corpus_file);
    auto summary = fano::classify_corpus(corpus, fano::ClassifyOptions{});
    auto report = fano::check_inclusions(summary.records);
    for (const auto& v : report.violations) std::cout << v << "\n";
    std::cout << "UT-free duals that are not USFPs: " << report.utfree_not_usfp.size() << "\n";
    for (const auto& id : report.utfree_not_usfp) std::cout << "  " << id << "\n";
    std::cout << "UT-free duals that are not SFPdGs: " << report.utfree_not_sfpdg.size() << "\n";
    for (const auto& id : report.utfree_not_sfpdg) std::cout << "  " << id << "\n";
    std::cout << (report.ok() ? "all inclusion checks pass" : "inclusion violations found") << "\n";
    return report.ok() ? 0 : 1;
}

int run_import(const std::string& file, const std::string& out) {
    auto corpus = fano::import_polydb(file);
    write_output(out, fano::corpus_jsonl(corpus));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for unimodular smooth Fano polytopes"};
    app.require_subcommand(1);

    std::string corpus_file, id, out = "-", format = "md", condition, import_file;
    std::size_t jobs = 1, facet = 0;
    int max_dim = -1;
    bool witness = false;

    auto* c_classify = app.add_subcommand("classify", "classify a corpus and print the count table");
    c_classify->add_option("--corpus", corpus_file, "corpus JSON-lines file")->required();
    c_classify->add_option("--format", format, "md, csv, or json")
        ->check(CLI::IsMember({"md", "csv", "json"}));
    c_classify->add_option("--out", out, "output file (default stdout)");
    c_classify->add_option("--jobs", jobs, "worker threads (0 = hardware)");
    c_classify->add_option("--max-dim", max_dim, "skip entries above this dimension");

    auto* c_verify = app.add_subcommand("verify", "full flag report for one polytope");
    c_verify->add_option("--corpus", corpus_file, "corpus JSON-lines file")->required();
    c_verify->add_option("--id", id, "polytope id")->required();

    auto* c_ewald = app.add_subcommand("ewald", "check an Ewald condition for one polytope");
    c_ewald->add_option("--corpus", corpus_file, "corpus JSON-lines file")->required();
    c_ewald->add_option("--id", id, "polytope id")->required();
    c_ewald->add_option("--condition", condition, "weak, strong, or star")->required();
    c_ewald->add_flag("--witness", witness, "print witnesses");

    auto* c_dual = app.add_subcommand("dual", "print the dual polytope as a corpus record");
    c_dual->add_option("--corpus", corpus_file, "corpus JSON-lines file")->required();
    c_dual->add_option("--id", id, "polytope id")->required();

    auto* c_sf = app.add_subcommand("standard-form", "vertex matrix times a facet basis inverse");
    c_sf->add_option("--corpus", corpus_file, "corpus JSON-lines file")->required();
    c_sf->add_option("--id", id, "polytope id")->required();
    c_sf->add_option("--facet", facet, "facet index")->required();

    auto* c_gen2 = app.add_subcommand("gen2", "generate the dimension-2 corpus");
    c_gen2->add_option("--out", out, "output file (default stdout)");

    auto* c_inc = app.add_subcommand("check-inclusions", "verify class inclusions over a corpus");
    c_inc->add_option("--corpus", corpus_file, "corpus JSON-lines file")->required();

    auto* c_imp = app.add_subcommand("import-polydb", "convert polyDB-style JSON to the corpus format");
    c_imp->add_option("file", import_file, "polyDB JSON file")->required();
    c_imp->add_option("--out", out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (c_classify->parsed()) return run_classify(corpus_file, format, out, jobs, max_dim);
        if (c_verify->parsed()) return run_verify(corpus_file, id);
        if (c_ewald->parsed()) return run_ewald(corpus_file, id, condition, witness);
        if (c_dual->parsed()) return run_dual(corpus_file, id);
        if (c_sf->parsed()) return run_standard_form(corpus_file, id, facet);
        if (c_gen2->parsed()) return run_gen2(out);
        if (c_inc->parsed()) return run_check_inclusions(corpus_file);
        if (c_imp->parsed()) return run_import(import_file, out);
    } catch (const std::domain_error& e) {
        std::cerr << "fano: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "fano: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
