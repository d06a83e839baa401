#include "homcx/counterexample.hpp"

#include "homcx/chromatic.hpp"
#include "homcx/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace homcx {

namespace {

    // grid positions (see kGridVertex): corners 0..3, midpoints t,r,b,l = 4..7, center 8
    constexpr int kTop = 4, kRight = 5, kBottom = 6, kLeft = 7, kCenter = 8;

    const Graph& g9()
    {
        static const Graph g = counterexample_g9();
        return g;
    }

    // Midpoint patterns of the two center-spare colorings after relabeling the
    // signature to (1,2,3,4): (t,l,r,b), 0-based.
    constexpr std::array<int, 4> kSTemplate = {2, 1, 3, 0}; // 132 254 413
    constexpr std::array<int, 4> kTTemplate = {3, 2, 0, 1}; // 142 351 423

    // Relabeled (t,b) keys of the four middle-row template squares and the
    // relabeled (l,r) keys of the four middle-column ones, subtypes a..d.
    constexpr std::array<std::pair<int, int>, 4> kHKeys = {{{2, 1}, {3, 0}, {2, 0}, {3, 1}}};
    constexpr std::array<std::pair<int, int>, 4> kVKeys = {{{2, 3}, {1, 0}, {2, 0}, {1, 3}}};

} // namespace

char kind_char(Kind k)
{
    switch (k) {
    case Kind::s:
        return 's';
    case Kind::t:
        return 't';
    case Kind::h:
        return 'h';
    case Kind::v:
        return 'v';
    }
    return '?';
}

Coloring coloring_from_grid(std::string_view grid)
{
    Coloring c(9, -1);
    std::size_t pos = 0;
    for (char ch : grid) {
        if (ch == ' ')
            continue;
        if (ch < '1' || ch > '5')
            throw std::invalid_argument("grid cells must be digits 1..5");
        if (pos >= 9)
            throw std::invalid_argument("grid has more than 9 cells");
        c[kGridVertex[pos++]] = ch - '1';
    }
    if (pos != 9)
        throw std::invalid_argument("grid has fewer than 9 cells");
    return c;
}

std::string coloring_to_grid(const Coloring& c)
{
    if (c.size() != 9)
        throw std::invalid_argument("grid form needs a 9-vertex coloring");
    std::string out;
    for (int i = 0; i < 9; ++i) {
        if (i == 3 || i == 6)
            out += ' ';
        out += static_cast<char>('1' + c[kGridVertex[i]]);
    }
    return out;
}

ClassifiedColoring classify(const Coloring& coloring)
{
    if (coloring.size() != 9)
        throw ClassifyError("coloring does not have 9 vertices");
    for (int c : coloring)
        if (c < 0 || c > 4)
            throw ClassifyError("color out of range for a 5-coloring");
    if (!is_proper(g9(), coloring, 5))
        throw ClassifyError("not a proper coloring of the counterexample graph: "
                + coloring_to_grid(coloring));

    ClassifiedColoring out;
    out.coloring = coloring;
    out.signature = {coloring[0], coloring[1], coloring[2], coloring[3]};

    bool seen[5] = {};
    for (int c : out.signature) {
        if (seen[c])
            throw ClassifyError("corner colors are not distinct: " + coloring_to_grid(coloring));
        seen[c] = true;
    }
    for (int c = 0; c < 5; ++c)
        if (!seen[c])
            out.spare = c;

    // relabel so the signature reads (1,2,3,4) and the spare color is 5
    int relabel[5];
    for (int i = 0; i < 4; ++i)
        relabel[out.signature[i]] = i;
    relabel[out.spare] = 4;

    int t = relabel[coloring[kTop]];
    int r = relabel[coloring[kRight]];
    int b = relabel[coloring[kBottom]];
    int l = relabel[coloring[kLeft]];
    int z = relabel[coloring[kCenter]];

    if (z == 4) {
        std::array<int, 4> key = {t, l, r, b};
        if (key == kSTemplate)
            out.kind = Kind::s;
        else if (key == kTTemplate)
            out.kind = Kind::t;
        else
            throw ClassifyError("center-spare coloring matches neither template: "
                    + coloring_to_grid(coloring));
        return out;
    }

    bool spare_in_row = (l == 4) || (r == 4);
    bool spare_in_col = (t == 4) || (b == 4);
    if (spare_in_row == spare_in_col)
        throw ClassifyError("spare color is not confined to the middle row or column: "
                + coloring_to_grid(coloring));
    if (spare_in_row) {
        out.kind = Kind::h;
        std::pair<int, int> key{t, b};
        for (int s = 0; s < 4; ++s)
            if (kHKeys[s] == key)
                out.subtype = s;
    } else {
        out.kind = Kind::v;
        std::pair<int, int> key{l, r};
        for (int s = 0; s < 4; ++s)
            if (kVKeys[s] == key)
                out.subtype = s;
    }
    if (out.subtype < 0)
        throw ClassifyError("no template square matches: " + coloring_to_grid(coloring));
    return out;
}

namespace {

    int signature_key(const std::array<int, 4>& sig)
    {
        return ((sig[0] * 5 + sig[1]) * 5 + sig[2]) * 5 + sig[3];
    }

    std::string signature_digits(const std::array<int, 4>& sig)
    {
        std::string s;
        for (int c : sig)
            s += static_cast<char>('1' + c);
        return s;
    }

    std::string square_name(Kind k, int subtype)
    {
        std::string s(1, kind_char(k));
        if (subtype >= 0) {
            s += '_';
            s += static_cast<char>('a' + subtype);
        }
        return s;
    }

    constexpr std::array<int, 4> kCanonicalSig = {0, 1, 2, 3};

} // namespace

CensusResult verify_counts(const HomSet& homset)
{
    CensusResult res;
    res.total = homset.size();

    struct Tally {
        int s = 0, t = 0;
        int h[4] = {}, v[4] = {};
        int h_total() const { return h[0] + h[1] + h[2] + h[3]; }
        int v_total() const { return v[0] + v[1] + v[2] + v[3]; }
    };
    std::map<int, Tally> tallies;
    auto fail = [&](const std::string& msg) {
        if (res.failures.size() < 50)
            res.failures.push_back(msg);
    };

    for (const auto& coloring : homset.colorings) {
        ClassifiedColoring cc;
        try {
            cc = classify(coloring);
        } catch (const ClassifyError& e) {
            fail(std::string("classification: ") + e.what());
            continue;
        }
        Tally& tally = tallies[signature_key(cc.signature)];
        switch (cc.kind) {
        case Kind::s:
            ++tally.s;
            break;
        case Kind::t:
            ++tally.t;
            break;
        case Kind::h:
            ++tally.h[cc.subtype];
            break;
        case Kind::v:
            ++tally.v[cc.subtype];
            break;
        }
        if (cc.signature == kCanonicalSig && (cc.kind == Kind::h || cc.kind == Kind::v))
            res.canonical_squares[square_name(cc.kind, cc.subtype)].push_back(
                coloring_to_grid(coloring));
    }

    res.signature_count = static_cast<int>(tallies.size());
    if (res.signature_count != 120)
        fail("expected 120 corner signatures, found " + std::to_string(res.signature_count));

    res.per_signature_ok = true;
    res.squares_ok = true;
    bool uniform = !tallies.empty();
    for (const auto& [key, tally] : tallies) {
        std::array<int, 4> sig = {key / 125 % 5, key / 25 % 5, key / 5 % 5, key % 5};
        if (tally.s != 1 || tally.t != 1 || tally.h_total() != 16 || tally.v_total() != 16) {
            res.per_signature_ok = false;
            fail("signature " + signature_digits(sig) + ": s=" + std::to_string(tally.s)
                    + " t=" + std::to_string(tally.t) + " h=" + std::to_string(tally.h_total())
                    + " v=" + std::to_string(tally.v_total()));
        }
        for (int s = 0; s < 4; ++s) {
            if (tally.h[s] != 4) {
                res.squares_ok = false;
                fail("square h_" + std::string(1, static_cast<char>('a' + s)) + " of signature "
                        + signature_digits(sig) + " has " + std::to_string(tally.h[s])
                        + " completions");
            }
            if (tally.v[s] != 4) {
                res.squares_ok = false;
                fail("square v_" + std::string(1, static_cast<char>('a' + s)) + " of signature "
                        + signature_digits(sig) + " has " + std::to_string(tally.v[s])
                        + " completions");
            }
        }
    }
    if (uniform) {
        const Tally& first = tallies.begin()->second;
        res.s_count = first.s;
        res.t_count = first.t;
        res.h_count = first.h_total();
        res.v_count = first.v_total();
        for (const auto& [key, tally] : tallies)
            if (tally.s != first.s || tally.t != first.t || tally.h_total() != first.h_total()
                || tally.v_total() != first.v_total())
                res.s_count = res.t_count = res.h_count = res.v_count = -1;
    }

    // the two pinned central-row completion sets of the canonical signature
    auto central_rows = [&](const char* square) {
        std::set<std::string> rows;
        auto it = res.canonical_squares.find(square);
        if (it != res.canonical_squares.end())
            for (const auto& grid : it->second)
                rows.insert(std::string(grid, 4, 3));
        return rows;
    };
    res.quoted_sets_ok = central_rows("h_a") == std::set<std::string>{"514", "515", "545", "541"}
        && central_rows("h_c") == std::set<std::string>{"245", "545", "525", "524"};
    if (!res.quoted_sets_ok)
        fail("central-row completion sets of h_a/h_c do not match the pinned values");

    if (res.total != 4080)
        fail("expected 4080 colorings, found " + std::to_string(res.total));

    res.ok = res.failures.empty() && res.total == 4080 && res.signature_count == 120
        && res.per_signature_ok && res.squares_ok && res.quoted_sets_ok;
    return res;
}

namespace {

    struct TypeRef {
        Kind kind;
        std::array<int, 4> sig;
        int subtype; // -1 = any
    };

    std::string type_ref_name(const TypeRef& t)
    {
        std::string s(1, kind_char(t.kind));
        s += "_" + signature_digits(t.sig);
        if (t.subtype >= 0) {
            s += ',';
            s += static_cast<char>('a' + t.subtype);
        }
        return s;
    }

    bool matches(const ClassifiedColoring& cc, const TypeRef& ref)
    {
        return cc.kind == ref.kind && cc.signature == ref.sig
            && (ref.subtype < 0 || cc.subtype == ref.subtype);
    }

    // An edge written as a coloring where one vertex carries two colors, e.g.
    // "132 514 42{3,5}". Expands to the two endpoint colorings in brace order.
    std::pair<Coloring, Coloring> expand_edge_grid(std::string_view grid)
    {
        std::string a, b;
        bool in_brace = false, second = false;
        int brace_count = 0;
        for (char ch : grid) {
            if (ch == '{') {
                in_brace = true;
                second = false;
                ++brace_count;
            } else if (ch == '}') {
                in_brace = false;
            } else if (ch == ',') {
                second = true;
            } else if (ch != ' ') {
                if (!in_brace) {
                    a += ch;
                    b += ch;
                } else if (!second) {
                    a += ch;
                } else {
                    b += ch;
                }
            }
        }
        if (brace_count != 1)
            throw std::invalid_argument("edge grid needs exactly one two-colored cell");
        return {coloring_from_grid(a), coloring_from_grid(b)};
    }

    struct EdgeCert {
        const char* grid;
        TypeRef first, second;
    };

    // The six connecting edges between subtype classes of the canonical
    // signature, in display order, plus the two extra links used to walk from
    // the merged middle-row class to neighboring signatures.
    const EdgeCert kEdgeCerts[] = {
        {"132 514 42{3,5}", {Kind::h, {0, 1, 2, 3}, 0}, {Kind::v, {0, 1, 4, 3}, 0}},
        {"132 524 41{5,3}", {Kind::v, {0, 1, 4, 3}, 0}, {Kind::h, {0, 1, 2, 3}, 2}},
        {"13{2,5} 541 423", {Kind::h, {0, 1, 2, 3}, 0}, {Kind::v, {0, 4, 2, 3}, 1}},
        {"14{5,2} 531 423", {Kind::v, {0, 4, 2, 3}, 1}, {Kind::h, {0, 1, 2, 3}, 3}},
        {"{1,5}42 235 413", {Kind::h, {0, 1, 2, 3}, 1}, {Kind::v, {4, 1, 2, 3}, 1}},
        {"{5,1}32 245 413", {Kind::v, {4, 1, 2, 3}, 1}, {Kind::h, {0, 1, 2, 3}, 2}},
    };
    const EdgeCert kClassLinks[] = {
        {"13{2,5} 514 423", {Kind::h, {0, 1, 2, 3}, -1}, {Kind::v, {0, 4, 2, 3}, -1}},
        {"142 235 {4,5}13", {Kind::h, {0, 1, 2, 3}, -1}, {Kind::v, {0, 1, 2, 4}, -1}},
    };

    const char* kPathCert[] = {"132 514 423", "132 515 423", "132 545 423", "132 541 423"};

    // Claimed flip neighbors of the two center-spare colorings.
    struct NeighborClaim {
        const char* grid;
        TypeRef target;
    };
    const NeighborClaim kNeighborClaims[] = {
        {"132 254 413", {Kind::v, {4, 1, 2, 3}, -1}}, // s touches v of signature 5234
        {"132 254 413", {Kind::h, {0, 4, 2, 3}, -1}}, // s touches h of signature 1534
        {"142 351 423", {Kind::h, {4, 1, 2, 3}, -1}}, // t touches h of signature 5234
    };

} // namespace

CertificateResult verify_certificates(const FlipGraph& fg)
{
    CertificateResult res;
    auto fail = [&](const std::string& msg) { res.failures.push_back(msg); };

    // (i) the displayed 4-step flip path
    res.path_ok = true;
    for (int i = 0; i + 1 < 4; ++i) {
        try {
            Coloring a = coloring_from_grid(kPathCert[i]);
            Coloring b = coloring_from_grid(kPathCert[i + 1]);
            if (!is_edge(fg, a, b)) {
                res.path_ok = false;
                fail(std::string("path step ") + kPathCert[i] + " -> " + kPathCert[i + 1]
                        + " is not an edge");
            }
        } catch (const std::exception& e) {
            res.path_ok = false;
            fail(std::string("path step ") + kPathCert[i] + ": " + e.what());
        }
    }

    // (ii) every displayed two-colored edge, endpoints classified as stated
    res.edges_ok = true;
    auto check_edge = [&](const EdgeCert& cert) {
        try {
            auto [a, b] = expand_edge_grid(cert.grid);
            if (!is_edge(fg, a, b)) {
                res.edges_ok = false;
                fail(std::string("certificate edge ") + cert.grid + " is not an edge");
                return;
            }
            ClassifiedColoring ca = classify(a);
            ClassifiedColoring cb = classify(b);
            if (!matches(ca, cert.first) || !matches(cb, cert.second)) {
                res.edges_ok = false;
                fail(std::string("certificate edge ") + cert.grid + " does not connect "
                        + type_ref_name(cert.first) + " to " + type_ref_name(cert.second));
            }
        } catch (const std::exception& e) {
            res.edges_ok = false;
            fail(std::string("certificate edge ") + cert.grid + ": " + e.what());
        }
    };
    for (const auto& cert : kEdgeCerts)
        check_edge(cert);
    for (const auto& cert : kClassLinks)
        check_edge(cert);

    // (iii) the four completions of each template square induce a path in G'
    res.squares_ok = true;
    std::map<std::string, std::vector<std::size_t>> squares;
    for (std::size_t i = 0; i < fg.homset.size(); ++i) {
        ClassifiedColoring cc;
        try {
            cc = classify(fg.homset.colorings[i]);
        } catch (const ClassifyError&) {
            res.squares_ok = false;
            fail("square check: unclassifiable coloring in homset");
            continue;
        }
        if (cc.signature == kCanonicalSig && (cc.kind == Kind::h || cc.kind == Kind::v))
            squares[square_name(cc.kind, cc.subtype)].push_back(i);
    }
    for (const auto& [name, members] : squares) {
        if (members.size() != 4) {
            res.squares_ok = false;
            fail("square " + name + " has " + std::to_string(members.size()) + " completions");
            continue;
        }
        int degree[4] = {};
        int edge_total = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                const auto& a = fg.homset.colorings[members[i]];
                const auto& b = fg.homset.colorings[members[j]];
                int d = 0;
                for (std::size_t k = 0; k < a.size(); ++k)
                    d += a[k] != b[k];
                if (d == 1) {
                    ++degree[i];
                    ++degree[j];
                    ++edge_total;
                }
            }
        std::array<int, 4> deg = {degree[0], degree[1], degree[2], degree[3]};
        std::sort(deg.begin(), deg.end());
        if (edge_total != 3 || deg != std::array<int, 4>{1, 1, 2, 2}) {
            res.squares_ok = false;
            fail("square " + name + " does not induce a path");
        }
    }
    if (squares.size() != 8) {
        res.squares_ok = false;
        fail("expected 8 template squares, found " + std::to_string(squares.size()));
    }

    // claimed neighbors of the s/t colorings
    res.neighbors_ok = true;
    for (const auto& claim : kNeighborClaims) {
        try {
            Coloring c = coloring_from_grid(claim.grid);
            auto idx = fg.homset.index_of(c);
            if (idx < 0)
                throw ClassifyError("coloring missing from homset");
            bool found = false;
            for (std::uint32_t nbr : fg.adjacency[idx]) {
                ClassifiedColoring cc = classify(fg.homset.colorings[nbr]);
                if (matches(cc, claim.target)) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                res.neighbors_ok = false;
                fail(std::string(claim.grid) + " has no neighbor in " + type_ref_name(claim.target));
            }
        } catch (const std::exception& e) {
            res.neighbors_ok = false;
            fail(std::string("neighbor claim ") + claim.grid + ": " + e.what());
        }
    }
    return res;
}

PaperReport verify_paper(const Graph& g, int threads)
{
    PaperReport rep;
    auto fail = [&](const std::string& msg) { rep.failures.push_back(msg); };

    ChromaticResult chrom = chromatic_number(g);
    rep.chi = chrom.chi;
    rep.chi_ok = chrom.chi == 5;
    if (!rep.chi_ok)
        fail("chromatic number is " + std::to_string(chrom.chi) + ", expected 5");

    HomEnumOptions opt;
    opt.threads = threads;
    HomSet homset = enumerate_homs(g, complete_graph(5), opt);
    rep.total = homset.size();
    rep.total_ok = rep.total == 4080;
    if (!rep.total_ok)
        fail("coloring count is " + std::to_string(rep.total) + ", expected 4080");

    if (g.n == 9) {
        CensusResult census = verify_counts(homset);
        rep.signature_count = census.signature_count;
        rep.per_signature_s = census.s_count;
        rep.per_signature_t = census.t_count;
        rep.per_signature_h = census.h_count;
        rep.per_signature_v = census.v_count;
        rep.counts_ok = census.ok;
        rep.squares_ok = census.squares_ok && census.quoted_sets_ok;
        rep.canonical_squares = census.canonical_squares;
        for (const auto& f : census.failures)
            fail("census: " + f);
    } else {
        rep.counts_ok = rep.squares_ok = false;
        fail("census: graph does not have 9 vertices");
    }

    FlipGraph fg = build_flip_graph(std::move(homset), threads);
    ComponentReport comp = components(fg);
    rep.components = comp.component_count;
    rep.components_ok = comp.component_count == 1;
    if (!rep.components_ok)
        fail("flip graph has " + std::to_string(comp.component_count)
                + " components, expected 1");

    if (g.n == 9) {
        CertificateResult certs = verify_certificates(fg);
        rep.certificates_ok = certs.ok();
        for (const auto& f : certs.failures)
            fail("certificate: " + f);
    } else {
        rep.certificates_ok = false;
        fail("certificates: graph does not have 9 vertices");
    }

    rep.pass = rep.chi_ok && rep.total_ok && rep.counts_ok && rep.squares_ok
        && rep.certificates_ok && rep.components_ok;
    return rep;
}

PaperReport verify_paper(int threads)
{
    return verify_paper(counterexample_g9(), threads);
}

std::string paper_report_text(const PaperReport& rep)
{
    auto mark = [](bool ok) { return ok ? "[ok]" : "[FAIL]"; };
    std::ostringstream out;
    out << "chromatic number          " << rep.chi << " (expect 5)      " << mark(rep.chi_ok)
        << '\n';
    out << "5-colorings               " << rep.total << " (expect 4080)  " << mark(rep.total_ok)
        << '\n';
    out << "corner signatures         " << rep.signature_count << " (expect 120)    "
        << mark(rep.signature_count == 120) << '\n';
    out << "per-signature census      s=" << rep.per_signature_s << " t=" << rep.per_signature_t
        << " h=" << rep.per_signature_h << " v=" << rep.per_signature_v << "  "
        << mark(rep.counts_ok) << '\n';
    out << "template squares (4 each) " << mark(rep.squares_ok) << '\n';
    for (const auto& [name, grids] : rep.canonical_squares) {
        auto sorted = grids;
        std::sort(sorted.begin(), sorted.end());
        out << "  " << name << ":";
        for (const auto& g : sorted)
            out << "  " << g;
        out << '\n';
    }
    out << "certificate suite         " << mark(rep.certificates_ok) << '\n';
    out << "flip-graph components     " << rep.components << " (expect 1)      "
        << mark(rep.components_ok) << '\n';
    if (rep.pass)
        out << "conjecture audit: Hom(G,K5) is 0-connected while chi(K5) = 5 < chi(G) + 1 = "
            << rep.chi + 1 << ", so the claimed bound fails\n";
    for (const auto& f : rep.failures)
        out << "failure: " << f << '\n';
    out << "verdict: " << (rep.pass ? "PASS" : "FAIL") << '\n';
    return out.str();
}

std::string paper_report_json(const PaperReport& rep)
{
    nlohmann::ordered_json j;
    j["chi"] = rep.chi;
    j["total"] = rep.total;
    j["signatures"] = rep.signature_count;
    j["per_signature"] = {{"s", rep.per_signature_s}, {"t", rep.per_signature_t},
        {"h", rep.per_signature_h}, {"v", rep.per_signature_v}};
    j["squares_ok"] = rep.squares_ok;
    j["certificates_ok"] = rep.certificates_ok;
    j["components"] = rep.components;
    j["pass"] = rep.pass;
    return j.dump(2) + "\n";
}

} // namespace homcx
