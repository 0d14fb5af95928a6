// Command-line front end: validate and analyze bigraded complexes, emit the
// built-in example instances, and generate test corpora.
//
// Exit codes: 0 success, 2 parse error, 3 validation failure, 4 internal
// cross-check failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bgc/build.hpp"
#include "bgc/corpus.hpp"
#include "bgc/errors.hpp"
#include "bgc/geometry.hpp"
#include "bgc/io.hpp"
#include "bgc/lowdegree.hpp"
#include "bgc/obstruction.hpp"
#include "bgc/spectral.hpp"
#include "bgc/structure.hpp"

using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw bgc::ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Output {
    std::string format = "text";
    json doc = json::object();

    bool is_json() const { return format == "json"; }
    void flush() const {
        if (is_json()) std::cout << doc.dump(2) << "\n";
    }
};

json bidegree_json(bgc::Bidegree b) { return json{{"p", b.p}, {"q", b.q}}; }

void cmd_validate(const std::string& file, Output& out) {
    bgc::BigradedComplex c = bgc::parse_complex_document(read_input(file));
    const bgc::ValidationReport& report = c.validation();
    if (out.is_json()) {
        out.doc["valid"] = report.ok();
        out.doc["violations"] = json::array();
        for (const auto& v : report.violations)
            out.doc["violations"].push_back({{"identity", "Cob" + std::to_string(v.identity)},
                                             {"at", bidegree_json(v.at)},
                                             {"detail", v.detail}});
        out.flush();
    } else {
        std::cout << (report.ok() ? "valid\n" : report.to_string());
    }
    if (!report.ok()) std::exit(3);
}

void cmd_cohomology(const std::string& file, int degree, Output& out) {
    bgc::BigradedComplex c = bgc::parse_complex(read_input(file));
    bgc::CohomologyResult h = bgc::cohomology(c, degree);
    if (out.is_json()) {
        out.doc = {{"degree", degree},
                   {"dim", h.dim},
                   {"cocycles_dim", h.cocycles.dim()},
                   {"coboundaries_dim", h.coboundaries.dim()}};
        out.flush();
    } else {
        std::cout << "H^" << degree << ": dim " << h.dim << " (cocycles " << h.cocycles.dim()
                  << ", coboundaries " << h.coboundaries.dim() << ")\n";
    }
}

void cmd_spectral(const std::string& file, int page, bool infinity, Output& out) {
    bgc::BigradedComplex c = bgc::parse_complex(read_input(file));
    if (infinity) {
        json table = json::array();
        std::map<int, int> per_degree;
        for (int p = 0; p <= c.pmax(); ++p) {
            for (int q = 0; q <= c.qmax(); ++q) {
                if (c.total_dim(p + q) == 0) continue;
                bgc::EInfinity e = bgc::e_infinity(c, p, q);
                per_degree[p + q] += e.dim;
                if (e.dim > 0)
                    table.push_back({{"p", p},
                                     {"q", q},
                                     {"dim", e.dim},
                                     {"stabilized_at", e.page_index_stabilized}});
                if (!out.is_json() && e.dim > 0)
                    std::cout << "E_inf(" << p << "," << q << ") = " << e.dim
                              << "  (stable from page " << e.page_index_stabilized << ")\n";
            }
        }
        if (out.is_json()) {
            out.doc["e_infinity"] = table;
            out.doc["per_degree_sums"] = json::object();
        }
        for (const auto& [k, s] : per_degree) {
            int h = bgc::cohomology(c, k).dim;
            if (out.is_json())
                out.doc["per_degree_sums"][std::to_string(k)] = {{"sum", s}, {"h_dim", h}};
            else if (s > 0 || h > 0)
                std::cout << "degree " << k << ": sum " << s << ", dim H = " << h << "\n";
        }
        out.flush();
        return;
    }
    bgc::SpectralPage pg = bgc::compute_page(c, page);
    if (out.is_json()) {
        out.doc["r"] = pg.r;
        out.doc["dims"] = json::array();
        for (const auto& [b, d] : pg.dims)
            out.doc["dims"].push_back({{"p", b.p}, {"q", b.q}, {"dim", d}});
        out.doc["differential_ranks"] = json::array();
        for (const auto& [b, m] : pg.differentials)
            if (bgc::rank(m) > 0)
                out.doc["differential_ranks"].push_back(
                    {{"p", b.p}, {"q", b.q}, {"rank", bgc::rank(m)}});
        out.flush();
    } else {
        std::cout << "page " << pg.r << ":\n";
        for (const auto& [b, d] : pg.dims)
            std::cout << "  E(" << b.p << "," << b.q << ") = " << d << "\n";
        for (const auto& [b, m] : pg.differentials)
            if (bgc::rank(m) > 0)
                std::cout << "  d_" << pg.r << " out of (" << b.p << "," << b.q
                          << ") has rank " << bgc::rank(m) << "\n";
    }
}

void cmd_diagram(const std::string& file, int k, int q, Output& out) {
    bgc::BigradedComplex c = bgc::parse_complex(read_input(file));
    bgc::DiagramReport r = bgc::diagram(c, k, q);
    if (out.is_json()) {
        out.doc = {{"k", r.k},
                   {"q", r.q},
                   {"p", r.p},
                   {"B_corner_dim", r.B_corner.dim()},
                   {"B_mid_dim", r.B_mid.dim()},
                   {"B_next_dim", r.B_next.dim()},
                   {"Z_corner_dim", r.Z_corner.dim()},
                   {"Z_mid_dim", r.Z_mid.dim()},
                   {"Z_next_dim", r.Z_next.dim()},
                   {"h_corner", r.h_corner},
                   {"h_mid", r.h_mid},
                   {"h_next", r.h_next},
                   {"row_B_kernel_matches", r.row_B_kernel_matches},
                   {"row_B_surjects", r.row_B_surjects},
                   {"row_Z_kernel_matches", r.row_Z_kernel_matches},
                   {"row_Z_surjects", r.row_Z_surjects},
                   {"columns_are_subspaces", r.columns_are_subspaces},
                   {"bottom_row_dims_exact", r.bottom_row_dims_exact},
                   {"exact", r.all_ok()}};
        out.flush();
    } else {
        std::cout << "diagram k=" << r.k << " q=" << r.q << " (p=" << r.p << ")\n"
                  << "  B: " << r.B_corner.dim() << " -> " << r.B_mid.dim() << " -> "
                  << r.B_next.dim() << "\n"
                  << "  Z: " << r.Z_corner.dim() << " -> " << r.Z_mid.dim() << " -> "
                  << r.Z_next.dim() << "\n"
                  << "  H: " << r.h_corner << " -> " << r.h_mid << " -> " << r.h_next << "\n"
                  << "  " << (r.all_ok() ? "exact" : r.failure_summary()) << "\n";
    }
    if (!r.all_ok()) throw bgc::ExactnessFailure(r.failure_summary());
}

void cmd_split(const std::string& file, int degree, Output& out) {
    bgc::BigradedComplex c = bgc::parse_complex(read_input(file));
    std::vector<int> parts = bgc::split_cohomology(c, degree);
    int total = 0;
    for (int x : parts) total += x;
    if (out.is_json()) {
        out.doc = {{"degree", degree}, {"parts", parts}, {"sum", total}};
        out.flush();
    } else {
        std::cout << "H^" << degree << " splits as [";
        for (std::size_t i = 0; i < parts.size(); ++i) std::cout << (i ? " " : "") << parts[i];
        std::cout << "], total " << total << "\n";
    }
}

void cmd_obstruct(const std::string& file, const std::string& cocycle_file, Output& out) {
    bgc::BigradedComplex c = bgc::parse_complex(read_input(file));
    bgc::GradedVector eta = bgc::parse_cocycle_document(c, read_input(cocycle_file));
    bgc::StructureAnalysis ctx(c);
    bgc::VanishingCertificate cert = bgc::decide_vanishing(c, eta, &ctx);
    if (out.is_json()) {
        out.doc["vanishes"] = cert.vanishes;
        out.doc["steps"] = json::array();
        for (const auto& s : cert.trace.steps)
            out.doc["steps"].push_back({{"at", bidegree_json(s.at)},
                                        {"class_vanishes", s.class_vanishes},
                                        {"class_dim", s.class_dim}});
        if (cert.vanishes)
            out.doc["witness"] = bgc::graded_vector_to_json(cert.trace.witness);
        else
            out.doc["first_obstruction"] = bidegree_json(cert.trace.first_obstruction);
        out.flush();
    } else {
        for (const auto& s : cert.trace.steps)
            std::cout << "stage (" << s.at.p << "," << s.at.q << "): "
                      << (s.class_vanishes ? "clears" : "obstructed")
                      << (s.class_dim >= 0 ? "  [stage quotient dim " +
                                                 std::to_string(s.class_dim) + "]"
                                           : "")
                      << "\n";
        std::cout << (cert.vanishes ? "vanishes: a primitive exists\n"
                                    : "does not vanish\n");
    }
}

void cmd_example(const std::string& name, int weight, Output&) {
    bgc::BigradedComplex c = [&]() {
        if (name == "nz") return bgc::example_nz();
        if (name == "torus") return bgc::example_torus();
        if (name == "interval2") return bgc::example_interval2();
        if (name == "vertical") return bgc::build_vertical_complex(weight);
        if (name == "product") return bgc::build_product_complex(bgc::circle_model(), weight);
        throw bgc::ParseError("unknown example '" + name + "'");
    }();
    json meta = {{"example", name}};
    if (name == "vertical" || name == "product") meta["weight"] = weight;
    std::cout << bgc::emit_complex(c, meta) << "\n";
}

void cmd_corpus(std::uint64_t seed, int count, Output&) {
    auto corpus = bgc::generate_corpus(seed, count);
    json arr = json::array();
    for (const auto& e : corpus) {
        json meta = {{"class", std::string(1, e.cls)}, {"seed", seed}};
        arr.push_back(bgc::complex_to_json(e.complex, meta));
    }
    std::cout << arr.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology engine for first-quadrant bigraded complexes"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::string file = "-";
    int degree = 0, page_r = 0, diag_k = 1, diag_q = 0, weight = 0, count = 1;
    std::uint64_t seed = 1;
    bool infinity = false;
    std::string cocycle_file, example_name;

    auto* validate = app.add_subcommand("validate", "check the five coboundary identities");
    validate->add_option("file", file, "complex JSON ('-' for stdin)");

    auto* cohomology = app.add_subcommand("cohomology", "dim H^k and its spaces");
    cohomology->add_option("--degree", degree, "total degree k")->required();
    cohomology->add_option("file", file);

    auto* spectral = app.add_subcommand("spectral", "spectral sequence pages");
    spectral->add_option("--page", page_r, "page index r");
    spectral->add_flag("--infinity", infinity, "stable page and convergence sums");
    spectral->add_option("file", file);

    auto* diagram = app.add_subcommand("diagram", "one (k,q) exactness diagram");
    diagram->add_option("--k", diag_k)->required();
    diagram->add_option("--q", diag_q)->required();
    diagram->add_option("file", file);

    auto* split = app.add_subcommand("split", "cohomology splitting by q");
    split->add_option("--degree", degree)->required();
    split->add_option("file", file);

    auto* obstruct = app.add_subcommand("obstruct", "walk the obstruction stages of a cocycle");
    obstruct->add_option("--cocycle", cocycle_file, "cocycle JSON file")->required();
    obstruct->add_option("file", file);

    auto* example = app.add_subcommand("example", "emit a built-in example complex");
    example->add_option("name", example_name, "nz | torus | interval2 | vertical | product")
        ->required();
    example->add_option("--weight", weight, "weight cutoff for vertical/product");

    auto* corpus = app.add_subcommand("corpus", "emit a deterministic test corpus");
    corpus->add_option("--seed", seed)->required();
    corpus->add_option("--count", count)->required();

    CLI11_PARSE(app, argc, argv);

    Output out;
    out.format = format;
    try {
        if (validate->parsed()) cmd_validate(file, out);
        if (cohomology->parsed()) cmd_cohomology(file, degree, out);
        if (spectral->parsed()) cmd_spectral(file, page_r, infinity, out);
        if (diagram->parsed()) cmd_diagram(file, diag_k, diag_q, out);
        if (split->parsed()) cmd_split(file, degree, out);
        if (obstruct->parsed()) cmd_obstruct(file, cocycle_file, out);
        if (example->parsed()) cmd_example(example_name, weight, out);
        if (corpus->parsed()) cmd_corpus(seed, count, out);
    } catch (const bgc::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const bgc::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const bgc::EngineBug& e) {
        std::cerr << e.what() << "\n";
        return 4;
    } catch (const bgc::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
