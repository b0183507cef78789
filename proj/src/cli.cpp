#include "fivefold/cli.hpp"

#include <array>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

#include "fivefold/catmap.hpp"
#include "fivefold/errors.hpp"
#include "fivefold/kzero.hpp"
#include "fivefold/penrose.hpp"
#include "fivefold/qfield.hpp"
#include "fivefold/selftest.hpp"
#include "fivefold/spectral.hpp"
#include "fivefold/symbolic.hpp"
#include "fivefold/tilegeom.hpp"

namespace fivefold {

namespace {

using nlohmann::json;  // plain json: objects keep keys sorted, as required

// ---- serialization helpers ------------------------------------------------

json json_int(const Int& v) {
    static const Int lo(std::numeric_limits<long long>::min());
    static const Int hi(std::numeric_limits<long long>::max());
    if (v >= lo && v <= hi) return json(v.convert_to<long long>());
    return json(v.str());
}

// a + b*sqrt5 with exact rational coordinates.
json json_quad(const QuadExt& x, bool approx) {
    json j{{"a", rat_to_string(x.a)}, {"b", rat_to_string(x.b)}, {"form", "a+b*sqrt5"}};
    if (approx) j["approx"] = quad_approx(x, 20);
    return j;
}

// a + b*tau with integer coordinates.
json json_golden(const GoldenInt& g, bool approx) {
    json j{{"a", g.m.str()}, {"b", g.n.str()}, {"form", "a+b*tau"}};
    if (approx) j["approx"] = quad_approx(embed(g), 20);
    return j;
}

json json_lattice(const LatticeElem& e) {
    return json{{"basis", basis_name(e.basis)},
                {"coeffs", json::array({json_int(e.c0), json_int(e.c1)})}};
}

json json_cat_lattice(const CatLatticeElem& c) {
    return json{{"basis", basis_name(LatticeBasis::cat)},
                {"coeffs", json::array({json_int(c.n), json_int(c.m)})}};
}

json json_quad_vec(const QuadVec& v, bool approx) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(json_quad(x, approx));
    return arr;
}

void emit(std::ostream& out, const std::string& command, json inputs, json result,
          bool exact) {
    const json envelope{{"command", command},
                        {"inputs", std::move(inputs)},
                        {"result", std::move(result)},
                        {"exact", exact}};
    out << envelope.dump(2) << "\n";
}

std::string golden_to_string(const GoldenInt& g) {
    std::ostringstream os;
    os << g.m.str() << " + " << g.n.str() << "*tau";
    return os.str();
}

Int int_from_string(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        fail(fault::BadArgument, "cannot parse integer '" + s + "'");
    }
}

// "NAME=COUNT" -> (NAME, COUNT); used by `penrose motif`.
std::pair<std::string, Int> parse_count_spec(const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0)
        fail(fault::BadArgument, "count must look like NAME=N, got '" + spec + "'");
    return {spec.substr(0, eq), int_from_string(spec.substr(eq + 1))};
}

// ---- penrose subcommands ---------------------------------------------------

void cmd_penrose_freqs(std::ostream& out, const std::string& kind,
                       const std::string& format, bool approx) {
    const FrequencyTable table = kind == "prototile" ? prototile_frequencies()
                                 : kind == "edge"    ? edge_frequencies()
                                                     : vertex_frequencies();
    if (format == "table") {
        std::size_t width = 5;
        for (const auto& l : table.labels) width = std::max(width, l.size());
        for (std::size_t i = 0; i < table.labels.size(); ++i) {
            out << std::left << std::setw(static_cast<int>(width) + 2) << table.labels[i]
                << "kappa = " << golden_to_string(golden_of_quad(table.converted_values[i]))
                << "   hat = " << quad_to_string(table.hat_values[i]);
            if (approx) out << "   ~ " << quad_approx(table.converted_values[i], 20);
            out << "\n";
        }
        return;
    }
    json kappa = json::array();
    for (const auto& v : table.converted_values)
        kappa.push_back(json_golden(golden_of_quad(v), approx));
    emit(out, "penrose freqs", json{{"format", format}, {"kind", kind}},
         json{{"hat", json_quad_vec(table.hat_values, approx)},
              {"kappa", std::move(kappa)},
              {"kind", table.kind},
              {"labels", table.labels}},
         true);
}

void cmd_penrose_motif(std::ostream& out, unsigned inflations,
                       const std::vector<std::string>& tile_specs,
                       const std::vector<std::string>& edge_specs,
                       const std::vector<std::string>& vertex_specs, bool approx) {
    Int n_l(0), n_s(0);
    for (const auto& spec : tile_specs) {
        const auto [name, count] = parse_count_spec(spec);
        if (name == "L")
            n_l += count;
        else if (name == "S")
            n_s += count;
        else
            fail(fault::BadArgument, "unknown tile '" + name + "' (expected L or S)");
    }
    const auto fill = [](const std::vector<std::string>& specs,
                         const std::array<std::string, 7>& labels) {
        std::array<Int, 7> counts{};
        for (const auto& spec : specs) {
            const auto [name, count] = parse_count_spec(spec);
            std::size_t idx = labels.size();
            for (std::size_t i = 0; i < labels.size(); ++i)
                if (labels[i] == name) idx = i;
            if (idx == labels.size())
                fail(fault::BadArgument, "unknown class '" + name + "'");
            counts[idx] += count;
        }
        return counts;
    };
    const std::array<Int, 7> n_edge = fill(edge_specs, edge_class_labels());
    const std::array<Int, 7> n_vertex = fill(vertex_specs, vertex_class_labels());

    const MotifFrequency mf = motif_frequency(inflations, n_l, n_s, n_edge, n_vertex);
    emit(out, "penrose motif",
         json{{"edge", edge_specs},
              {"inflations", inflations},
              {"tile", tile_specs},
              {"vertex", vertex_specs}},
         json{{"kappa", json_golden(mf.golden, approx)}}, true);
}

void cmd_penrose_code(std::ostream& out, const std::string& word,
                      const std::string& direction) {
    std::string coded;
    if (direction == "encode") {
        const Word w = parse_word(penrose_sft(), word);
        coded = format_word(penrose_block_sft(), recode(w));
    } else {
        const Word w = parse_word(penrose_block_sft(), word);
        coded = format_word(penrose_sft(), recode_inverse(w));
    }
    emit(out, "penrose code", json{{"direction", direction}, {"word", word}},
         json{{"word", coded}}, true);
}

// ---- tiling subcommands ----------------------------------------------------

TileKind parse_seed(const std::string& seed) {
    return seed == "L" ? TileKind::L : TileKind::S;
}

void cmd_tiling_render(std::ostream& out, const std::string& seed, unsigned inflations,
                       const std::string& path) {
    const TrianglePatch patch = inflate(single_tile_patch(parse_seed(seed)), inflations);
    const std::string svg = render_svg(patch);
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << svg) || !file.flush())
        fail(fault::BadArgument, "cannot write '" + path + "'");
    emit(out, "tiling render",
         json{{"inflations", inflations}, {"out", path}, {"seed", seed}},
         json{{"out", path},
              {"polygons", patch.triangles.size()},
              {"svg-bytes", svg.size()}},
         true);
}

void cmd_tiling_histogram(std::ostream& out, const std::string& seed, unsigned inflations,
                          const std::string& kind) {
    const TrianglePatch patch = inflate(single_tile_patch(parse_seed(seed)), inflations);
    const TileCounts counts = count_tiles(patch);
    json result{{"tiles", json{{"L", json_int(counts.n_L)}, {"S", json_int(counts.n_S)}}}};
    const auto histogram_json = [](const std::array<std::string, 7>& labels,
                                   const std::array<Int, 7>& counts_by_class) {
        json cs = json::array();
        for (const auto& c : counts_by_class) cs.push_back(json_int(c));
        return json{{"counts", std::move(cs)},
                    {"labels", std::vector<std::string>(labels.begin(), labels.end())}};
    };
    if (kind == "edge" || kind == "both")
        result["edge"] = histogram_json(edge_class_labels(), edge_histogram(patch));
    if (kind == "vertex" || kind == "both")
        result["vertex"] = histogram_json(vertex_class_labels(), vertex_histogram(patch));
    emit(out, "tiling histogram",
         json{{"inflations", inflations}, {"kind", kind}, {"seed", seed}},
         std::move(result), false);
}

// ---- sft subcommand ----------------------------------------------------------

void cmd_sft_words(std::ostream& out, const std::string& system, unsigned long length,
                   bool count_only, const std::string& from, const std::string& to,
                   std::size_t limit) {
    const Sft sft = system == "penrose"         ? penrose_sft()
                    : system == "penrose-block" ? penrose_block_sft()
                                                : cat_sft();
    std::optional<std::size_t> from_idx, to_idx;
    if (!from.empty()) from_idx = sft.symbol_index(from);
    if (!to.empty()) to_idx = sft.symbol_index(to);

    json result{{"count", json_int(count_words(sft, length, from_idx, to_idx))}};
    if (!count_only) {
        json words = json::array();
        for (const auto& w : enumerate_words(sft, length, limit)) {
            if (from_idx && w.front() != *from_idx) continue;
            if (to_idx && w.back() != *to_idx) continue;
            words.push_back(format_word(sft, w));
        }
        result["words"] = std::move(words);
    }
    emit(out, "sft words",
         json{{"count-only", count_only},
              {"from", from},
              {"length", length},
              {"limit", limit},
              {"system", system},
              {"to", to}},
         std::move(result), true);
}

// ---- cat subcommands ---------------------------------------------------------

void cmd_cat_areas(std::ostream& out, const std::string& format, bool approx) {
    const CatModel& model = cat_model();
    if (format == "table") {
        for (std::size_t i = 0; i < model.labels.size(); ++i) {
            const LatticeElem e = quad_to_lattice(model.mu[i], LatticeBasis::cat);
            out << std::left << std::setw(5) << model.labels[i]
                << "mu = " << quad_to_string(model.mu[i]) << "   zeta-eta = ("
                << e.c0.str() << ", " << e.c1.str() << ")";
            if (approx) out << "   ~ " << quad_approx(model.mu[i], 20);
            out << "\n";
        }
        return;
    }
    json mu = json::array();
    json lattice = json::array();
    for (const auto& v : model.mu) {
        mu.push_back(json_quad(v, approx));
        lattice.push_back(json_lattice(quad_to_lattice(v, LatticeBasis::cat)));
    }
    emit(out, "cat areas", json{{"format", format}},
         json{{"labels", model.labels},
              {"lattice", std::move(lattice)},
              {"mu", std::move(mu)}},
         true);
}

void cmd_cat_cylinder(std::ostream& out, const std::string& word, bool approx) {
    const CylinderMeasure cm = cylinder_measure(parse_word(cat_sft(), word));
    emit(out, "cat cylinder", json{{"word", word}},
         json{{"lattice", json_cat_lattice(cm.lattice)}, {"value", json_quad(cm.value, approx)}},
         true);
}

void cmd_cat_stage_dims(std::ostream& out, unsigned long n) {
    const RatMatrix m = stage_dims_cat(n);
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(json_int(rat_num(m.at(i, j))));
        rows.push_back(std::move(row));
    }
    emit(out, "cat stage-dims", json{{"n", n}}, json{{"matrix", std::move(rows)}, {"n", n}},
         true);
}

// ---- k0 subcommand -------------------------------------------------------------

K0Model parse_model(const std::string& name) {
    if (name == "penrose") return K0Model::penrose;
    if (name == "cat") return K0Model::cat;
    if (name == "baker") return K0Model::baker;
    return K0Model::compact_unit;
}

json json_group(const ScaledDimensionGroup& g, bool approx) {
    json functional = json::array();
    for (const auto& x : g.order_functional) functional.push_back(json_quad(x, approx));
    json unit = json::array();
    for (const auto& u : g.unit_class) unit.push_back(json_int(u));
    return json{{"embedding", g.embedding},
                {"functional", std::move(functional)},
                {"rank", g.rank},
                {"scale-bound", g.order_functional.empty() ? json(nullptr)
                                                           : json_quad(g.scale_bound, approx)},
                {"unit", std::move(unit)}};
}

std::vector<Int> parse_member(const std::string& csv) {
    std::vector<Int> coords;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) coords.push_back(int_from_string(token));
    if (coords.empty()) fail(fault::BadArgument, "empty member vector");
    return coords;
}

void cmd_k0(std::ostream& out, const std::string& model_name, const std::string& dims_csv,
            const std::string& member_csv, unsigned long stage, const std::string& check,
            bool approx) {
    json inputs{{"check", check},   {"dims", dims_csv},   {"member", member_csv},
                {"model", model_name}, {"stage", stage}};

    if (!dims_csv.empty()) {
        const ScaledDimensionGroup g = k0_of_finite(parse_member(dims_csv));
        emit(out, "k0", std::move(inputs), json{{"group", json_group(g, approx)}}, true);
        return;
    }

    const K0Model model = parse_model(model_name);
    const ScaledDimensionGroup g = k0_closed_form(model);
    if (member_csv.empty()) {
        emit(out, "k0", std::move(inputs), json{{"group", json_group(g, approx)}}, true);
        return;
    }

    const std::vector<Int> member = parse_member(member_csv);
    json result = json::object();
    bool positive = false, in_scale = false;
    if (model == K0Model::cat) {
        if (stage != 1)
            fail(fault::BadArgument,
                 "cat members are canonical stage-1 coordinates; --stage must be 1");
        const QuadExt value = functional_value(g, member);
        positive = quad_sign(value) >= 0;
        in_scale = positive && quad_cmp(value, g.scale_bound) <= 0;
        const CatPoint p = pi_embed_cat(member);
        result["embedded"] = json{{"alpha", json_cat_lattice(p.alpha)},
                                  {"u", json_int(p.u)},
                                  {"v", json_int(p.v)}};
        result["value"] = json_quad(value, approx);
    } else {
        const DimGroupElement element{stage, member};
        positive = dl_positive(model, element);
        in_scale = dl_in_scale(model, element);
        if (model == K0Model::penrose && stage == 1 && member.size() == 2)
            result["embedded"] = json_golden(pi_embed_penrose(member[0], member[1]), approx);
        if (model == K0Model::baker) {
            const DyadicRat d = baker_value(element);
            result["value"] = json{{"k", d.k}, {"p", json_int(d.p)}};
        }
    }
    if (check == "positive" || check == "both") result["positive"] = positive;
    if (check == "scale" || check == "both") result["in-scale"] = in_scale;
    emit(out, "k0", std::move(inputs), std::move(result), true);
}

// ---- selftest -------------------------------------------------------------------

int cmd_selftest(std::ostream& out, std::ostream& err) {
    const auto results = run_selftest();
    for (const auto& r : results) out << format_selftest_line(r) << "\n";
    // Timings are diagnostics: stdout stays byte-identical across runs.
    for (const auto& r : results) {
        err << "criterion " << r.number << ": " << std::fixed << std::setprecision(3)
            << r.seconds << " s\n";
    }
    return selftest_all_passed(results) ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact invariants of fivefold tilings and hyperbolic torus maps",
                 "fivefold"};
    app.require_subcommand(1);
    bool approx = false;
    app.add_flag("--approx", approx,
                 "append decimal renderings (20 significant digits) to exact values");

    int rc = 0;

    // penrose
    auto* penrose = app.add_subcommand("penrose", "substitution tiling invariants");
    penrose->require_subcommand(1);
    penrose->fallthrough();

    auto* freqs = penrose->add_subcommand("freqs", "exact frequency tables");
    freqs->fallthrough();
    std::string freqs_kind = "prototile";
    std::string freqs_format = "json";
    freqs->add_option("--kind", freqs_kind, "which table")
        ->check(CLI::IsMember({"prototile", "edge", "vertex"}));
    freqs->add_option("--format", freqs_format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    freqs->callback([&] { cmd_penrose_freqs(out, freqs_kind, freqs_format, approx); });

    auto* motif = penrose->add_subcommand("motif", "frequency of a finite motif");
    motif->fallthrough();
    unsigned motif_inflations = 0;
    std::vector<std::string> motif_tiles, motif_edges, motif_vertices;
    motif->add_option("--inflations", motif_inflations,
                      "how many inflations the motif has undergone");
    motif->add_option("--tile", motif_tiles, "tile counts, e.g. L=2 (repeatable)");
    motif->add_option("--edge", motif_edges, "edge-class counts, e.g. k=1 (repeatable)");
    motif->add_option("--vertex", motif_vertices,
                      "vertex-class counts, e.g. sun=1 (repeatable)");
    motif->callback([&] {
        cmd_penrose_motif(out, motif_inflations, motif_tiles, motif_edges, motif_vertices,
                          approx);
    });

    auto* code = penrose->add_subcommand("code", "block recoding of tile words");
    code->fallthrough();
    std::string code_word;
    std::string code_direction = "encode";
    code->add_option("--word", code_word, "comma-separated word")->required();
    code->add_option("--direction", code_direction, "encode: L,S word -> l,s word")
        ->check(CLI::IsMember({"encode", "decode"}));
    code->callback([&] { cmd_penrose_code(out, code_word, code_direction); });

    // tiling
    auto* tiling = app.add_subcommand("tiling", "geometric patches and histograms");
    tiling->require_subcommand(1);
    tiling->fallthrough();

    auto* render = tiling->add_subcommand("render", "inflate a seed and write an SVG");
    render->fallthrough();
    std::string render_seed = "L";
    unsigned render_inflations = 0;
    std::string render_out;
    render->add_option("--seed", render_seed, "seed tile")
        ->check(CLI::IsMember({"L", "S"}));
    render->add_option("--inflations", render_inflations, "inflation steps (0..12)")
        ->check(CLI::Range(0u, 12u));
    render->add_option("--out", render_out, "output SVG path")->required();
    render->callback([&] { cmd_tiling_render(out, render_seed, render_inflations, render_out); });

    auto* histogram = tiling->add_subcommand("histogram", "interior class counts of a patch");
    histogram->fallthrough();
    std::string hist_seed = "L";
    unsigned hist_inflations = 0;
    std::string hist_kind = "both";
    histogram->add_option("--seed", hist_seed, "seed tile")
        ->check(CLI::IsMember({"L", "S"}));
    histogram->add_option("--inflations", hist_inflations, "inflation steps (0..12)")
        ->check(CLI::Range(0u, 12u));
    histogram->add_option("--kind", hist_kind, "which histograms")
        ->check(CLI::IsMember({"edge", "vertex", "both"}));
    histogram->callback([&] { cmd_tiling_histogram(out, hist_seed, hist_inflations, hist_kind); });

    // sft
    auto* sft = app.add_subcommand("sft", "subshift word counting and enumeration");
    sft->require_subcommand(1);
    sft->fallthrough();

    auto* words = sft->add_subcommand("words", "admissible words of one length");
    words->fallthrough();
    std::string words_system = "penrose";
    unsigned long words_length = 1;
    bool words_count_only = false;
    std::string words_from, words_to;
    std::size_t words_limit = 1000000;
    words->add_option("--system", words_system, "which shift")
        ->check(CLI::IsMember({"penrose", "penrose-block", "cat"}));
    words->add_option("--length", words_length, "word length (>= 1)")->required();
    words->add_flag("--count-only", words_count_only, "print the count, not the words");
    words->add_option("--from", words_from, "pin the first symbol");
    words->add_option("--to", words_to, "pin the last symbol");
    words->add_option("--limit", words_limit, "enumeration cap (default one million)");
    words->callback([&] {
        cmd_sft_words(out, words_system, words_length, words_count_only, words_from,
                      words_to, words_limit);
    });

    // cat
    auto* cat = app.add_subcommand("cat", "torus automorphism invariants");
    cat->require_subcommand(1);
    cat->fallthrough();

    auto* areas = cat->add_subcommand("areas", "invariant measures of the partition");
    areas->fallthrough();
    std::string areas_format = "json";
    areas->add_option("--format", areas_format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    areas->callback([&] { cmd_cat_areas(out, areas_format, approx); });

    auto* cylinder = cat->add_subcommand("cylinder", "measure of one cylinder set");
    cylinder->fallthrough();
    std::string cylinder_word;
    cylinder->add_option("--word", cylinder_word,
                         "comma-separated itinerary (empty = whole space)");
    cylinder->callback([&] { cmd_cat_cylinder(out, cylinder_word, approx); });

    auto* stage_dims_cmd = cat->add_subcommand("stage-dims", "stage matrix of the refinement");
    stage_dims_cmd->fallthrough();
    unsigned long stage_n = 0;
    stage_dims_cmd->add_option("--n", stage_n, "stage index")->required();
    stage_dims_cmd->callback([&] { cmd_cat_stage_dims(out, stage_n); });

    // k0
    auto* k0 = app.add_subcommand("k0", "scaled dimension groups and embeddings");
    k0->fallthrough();
    std::string k0_model = "penrose";
    std::string k0_dims, k0_member;
    unsigned long k0_stage = 1;
    std::string k0_check = "both";
    auto* model_opt = k0->add_option("--model", k0_model, "built-in diagram")
                          ->check(CLI::IsMember({"penrose", "cat", "baker", "compact-unit"}));
    k0->add_option("--dims", k0_dims, "finite stage dimensions, e.g. 3,2")
        ->excludes(model_opt);
    k0->add_option("--member", k0_member,
                   "candidate class: stage vector (cat: canonical quadruple)");
    k0->add_option("--stage", k0_stage, "stage of --member (default 1)");
    k0->add_option("--check", k0_check, "which memberships to test")
        ->check(CLI::IsMember({"positive", "scale", "both"}));
    k0->callback([&] { cmd_k0(out, k0_model, k0_dims, k0_member, k0_stage, k0_check, approx); });

    // selftest
    auto* selftest = app.add_subcommand("selftest", "run the full verification battery");
    selftest->fallthrough();
    selftest->callback([&] { rc = cmd_selftest(out, err); });

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Fault& f) {
        err << f.what() << "\n";
        return 1;
    }
    return rc;
}

} // namespace fivefold
