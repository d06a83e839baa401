#pragma once

#include "homcx/flip_graph.hpp"
#include "homcx/graph.hpp"
#include "homcx/hom_enum.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace homcx {

// Machine verification of every claim about the bundled 9-vertex graph: the
// chromatic number, the 5-coloring census, the explicit connecting edges and
// paths, and the connectivity of the coloring flip graph.

// 3x3 grid rendering of a 5-coloring: row-major positions
// [c1 t c2 / l z r / c4 b c3] mapped onto vertices of counterexample_g9().
inline constexpr std::array<int, 9> kGridVertex = {0, 4, 1, 7, 8, 5, 3, 6, 2};

// "132 254 413" (spaces optional), digits 1..5 -> 0-based Coloring.
Coloring coloring_from_grid(std::string_view grid);
std::string coloring_to_grid(const Coloring& c);

enum class Kind { s, t, h, v };
char kind_char(Kind k);

struct ClassifiedColoring {
    Coloring coloring;
    std::array<int, 4> signature; // corner colors clockwise from top-left, 0-based
    int spare = -1;               // the color absent from the corners
    Kind kind = Kind::s;
    int subtype = -1; // 0..3 = a..d for kinds h/v, -1 for s/t
};

struct ClassifyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Classifies a proper 5-coloring of the g9 graph. s/t have the spare color at
// the center; h (resp. v) confine the spare color to the middle row (resp.
// column). Subtypes come from relabeling the corners to (1,2,3,4) and matching
// (t,b) against the h-templates or (l,r) against the v-templates. Throws
// ClassifyError when no template matches -- a fatal verification failure.
ClassifiedColoring classify(const Coloring& coloring);

struct CensusResult {
    bool ok = false;
    std::uint64_t total = 0;
    int signature_count = 0;
    // Uniform per-signature counts, or -1 when signatures disagree.
    int s_count = -1, t_count = -1, h_count = -1, v_count = -1;
    bool per_signature_ok = false;
    bool squares_ok = false;     // each of the 8 template squares has exactly 4 completions
    bool quoted_sets_ok = false; // the two pinned central-row sets reproduce verbatim
    // Completions of the eight canonical-signature squares, as grid strings.
    std::map<std::string, std::vector<std::string>> canonical_squares;
    std::vector<std::string> failures;
};

// Tallies the full homset: for each of the 120 corner signatures expect
// s=1, t=1, h=16, v=16, four completions per template square, total 4080.
CensusResult verify_counts(const HomSet& homset);

struct CertificateResult {
    bool path_ok = false;        // the displayed 4-step flip path
    bool edges_ok = false;       // the six two-colored connecting edges + class links
    bool squares_ok = false;     // each square's 4 completions induce a path in G'
    bool neighbors_ok = false;   // s/t colorings touch the claimed classes
    std::vector<std::string> failures;
    bool ok() const { return path_ok && edges_ok && squares_ok && neighbors_ok; }
};

CertificateResult verify_certificates(const FlipGraph& fg);

struct PaperReport {
    int chi = 0;
    bool chi_ok = false;
    std::uint64_t total = 0;
    bool total_ok = false;
    int signature_count = 0;
    int per_signature_s = -1, per_signature_t = -1;
    int per_signature_h = -1, per_signature_v = -1;
    bool counts_ok = false;
    bool squares_ok = false;
    bool certificates_ok = false;
    int components = 0;
    bool components_ok = false;
    std::map<std::string, std::vector<std::string>> canonical_squares;
    std::vector<std::string> failures;
    bool pass = false;
};

// Runs the whole pipeline: chi(g9)=5, |Hom(g9,K5)|=4080, census exactness,
// certificate suite, flip-graph connectivity. The graph overload exists so the
// same checks can be pointed at mutated candidates; they must then fail.
PaperReport verify_paper(const Graph& g, int threads = 1);
PaperReport verify_paper(int threads = 1);

std::string paper_report_text(const PaperReport& rep);
std::string paper_report_json(const PaperReport& rep);

} // namespace homcx
