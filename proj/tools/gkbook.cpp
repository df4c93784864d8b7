// gkbook.cpp — command line front end.
//
// Exit codes: 0 success (and "valid"/"consistent" for checking commands),
// 1 a well-formed certificate failed the check (or a search came up empty),
// 2 usage errors and malformed input files.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "gkbook/gkbook.hpp"

namespace {

using namespace gkbook;

Graph load_graph(const std::string& path) { return graph_from_json(load_json_file(path)); }

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write " + path);
    out << text;
}

int run_validate(const ValidationReport& report, const std::string& what,
                 const std::string& layers_key, const std::string& report_path) {
    if (!report_path.empty())
        save_json_file(report_path, validation_report_to_json(report, layers_key));
    std::cout << (report.valid ? "valid" : "invalid") << " " << what << ": " << layers_key << "="
              << report.layers_used << " conflicts=" << report.conflicts.size() << "\n";
    return report.valid ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"layouts and book embeddings of once-subdivided complete graphs"};
    app.require_subcommand(1);
    int rc = 0;

    // gen-gk
    int gen_k = 0;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen-gk", "write the subdivided complete graph as JSON");
    gen->add_option("--k", gen_k, "number of original vertices")->required()->check(CLI::Range(2, 5000));
    gen->add_option("--out", gen_out, "output path")->required();
    gen->callback([&] { save_json_file(gen_out, gk_to_json(build_gk(gen_k))); });

    // layout-theorem1
    int th_k = 0;
    std::string th_out;
    auto* th = app.add_subcommand("layout-theorem1", "two-layer straight-line drawing of G_k");
    th->add_option("--k", th_k, "number of original vertices")->required()->check(CLI::Range(2, 5000));
    th->add_option("--out", th_out, "output path")->required();
    th->callback([&] { save_json_file(th_out, drawing_to_json(theorem1_layout(th_k))); });

    // layout-sqrt
    int sq_k = 0;
    std::string sq_out;
    int sq_block = 0;
    auto* sq = app.add_subcommand("layout-sqrt", "book embedding of G_k on about 2*sqrt(k) pages");
    sq->add_option("--k", sq_k, "number of original vertices")->required()->check(CLI::Range(2, 5000));
    sq->add_option("--block-size", sq_block, "override the block size")->check(CLI::Range(1, 5000));
    sq->add_option("--out", sq_out, "output path")->required();
    sq->callback([&] {
        std::optional<int> block;
        if (sq_block > 0) block = sq_block;
        save_json_file(sq_out, book_to_json(sqrt_book_layout(sq_k, block)));
    });

    // validate-drawing
    std::string vd_graph, vd_drawing, vd_report;
    auto* vd = app.add_subcommand("validate-drawing", "check a layered drawing for conflicts");
    vd->add_option("--graph", vd_graph, "graph JSON")->required();
    vd->add_option("--drawing", vd_drawing, "drawing JSON")->required();
    vd->add_option("--report", vd_report, "write the full report here");
    vd->callback([&] {
        const Graph g = load_graph(vd_graph);
        const LayeredDrawing d = drawing_from_json(load_json_file(vd_drawing));
        rc = run_validate(validate_layered_drawing(g, d), "drawing", "layers_used", vd_report);
    });

    // validate-book
    std::string vb_graph, vb_book, vb_report;
    auto* vb = app.add_subcommand("validate-book", "check a book embedding for conflicts");
    vb->add_option("--graph", vb_graph, "graph JSON")->required();
    vb->add_option("--book", vb_book, "book embedding JSON")->required();
    vb->add_option("--report", vb_report, "write the full report here");
    vb->callback([&] {
        const Graph g = load_graph(vb_graph);
        const BookEmbedding be = book_from_json(load_json_file(vb_book));
        rc = run_validate(validate_book_embedding(g, be), "book", "pages_used", vb_report);
    });

    // bt
    std::string bt_graph;
    int bt_max_pages = 0;
    std::uint64_t bt_budget = SearchBudget{}.max_nodes;
    auto* bt = app.add_subcommand("bt", "exact book thickness of a small graph");
    bt->add_option("--graph", bt_graph, "graph JSON")->required();
    bt->add_option("--max-pages", bt_max_pages, "give up beyond this many pages")
        ->check(CLI::Range(1, 64));
    bt->add_option("--budget", bt_budget, "search node budget");
    bt->callback([&] {
        const Graph g = load_graph(bt_graph);
        const int max_p = bt_max_pages > 0 ? bt_max_pages : std::max(1, (g.n + 1) / 2);
        const ExactOutcome out = book_thickness_exact(g, max_p, SearchBudget{bt_budget});
        switch (out.kind) {
            case ExactOutcome::Kind::Solved: std::cout << out.result->value << "\n"; break;
            case ExactOutcome::Kind::ExceedsMaxPages:
                std::cerr << "book thickness exceeds " << max_p << " pages\n";
                rc = 1;
                break;
            case ExactOutcome::Kind::Unknown:
                std::cerr << "search budget exhausted\n";
                rc = 1;
                break;
        }
    });

    // audit
    int au_k = 0;
    std::string au_book, au_report;
    auto* au = app.add_subcommand("audit", "page-pair audit of a book embedding of G_k");
    au->add_option("--k", au_k, "number of original vertices")->required()->check(CLI::Range(2, 5000));
    au->add_option("--book", au_book, "book embedding JSON (default: the sqrt layout)");
    au->add_option("--report", au_report, "write the audit report here");
    au->callback([&] {
        const GkGraph gk = build_gk(au_k);
        const BookEmbedding be =
            au_book.empty() ? sqrt_book_layout(au_k) : book_from_json(load_json_file(au_book));
        const AuditReport report = separation_audit(gk, be);
        if (!au_report.empty()) save_json_file(au_report, audit_to_json(report));
        if (!report.input_valid)
            std::cerr << "warning: the embedding is not a valid book embedding\n";
        std::cout << to_string(report.verdict) << ": pages=" << report.pages_used
                  << " colors=" << report.colors_used;
        if (report.mono_k5) {
            std::cout << " mono_k5=[";
            for (int t = 0; t < 5; ++t)
                std::cout << (t ? "," : "") << (*report.mono_k5)[static_cast<std::size_t>(t)];
            std::cout << "]";
        }
        std::cout << "\n";
        rc = report.verdict == AuditVerdict::Consistent ? 0 : 1;
    });

    // render
    std::string re_graph, re_drawing, re_book, re_out;
    bool re_highlight = false;
    auto* re = app.add_subcommand("render", "render a drawing or book embedding as SVG");
    re->add_option("--graph", re_graph, "graph JSON")->required();
    auto* re_d = re->add_option("--drawing", re_drawing, "drawing JSON");
    auto* re_b = re->add_option("--book", re_book, "book embedding JSON");
    re_d->excludes(re_b);
    re->add_option("--out", re_out, "output SVG path")->required();
    re->add_flag("--highlight-conflicts", re_highlight, "overlay conflicting entities in red");
    re->callback([&] {
        const Graph g = load_graph(re_graph);
        if (re_drawing.empty() == re_book.empty())
            throw CLI::ValidationError("render", "exactly one of --drawing/--book is required");
        RenderStyle style;
        LayeredDrawing d;
        if (!re_drawing.empty()) {
            d = drawing_from_json(load_json_file(re_drawing));
        } else {
            d = embed_on_circle(g, book_from_json(load_json_file(re_book)));
            style.scale = 1;  // parabolic coordinates grow quadratically
        }
        const ValidationReport report = validate_layered_drawing(g, d);
        if (!report.valid)
            std::cerr << "warning: drawing has " << report.conflicts.size() << " conflicts\n";
        write_text_file(re_out, render_svg(g, d, style, re_highlight ? &report : nullptr));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e, std::cerr, std::cerr);
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
