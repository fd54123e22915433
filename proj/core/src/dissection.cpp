#include "qdissect/dissection.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qdissect/expr.hpp"

namespace qdissect {

namespace {

// Generating function of the odd-parts designated-summand count.
const char* kPdo = "f4*f6^2/(f1*f3*f12)";

const char* kD2Even = "f4^2*f6^4/(f1^2*f3^2*f12^2)";
const char* kD2Odd = "f2^6*f12^2/(f1^4*f4^2*f6^2)";

IdentityFixture exact(std::string name, std::string lhs, std::string rhs,
                      std::string source) {
    return IdentityFixture{std::move(name), std::move(lhs), {}, std::move(rhs),
                           std::nullopt,    std::move(source)};
}

IdentityFixture dissected(std::string name, std::vector<DissectRef> routes,
                          std::string rhs, std::optional<std::uint64_t> mod,
                          std::string source) {
    return IdentityFixture{std::move(name), std::nullopt, std::move(routes),
                           std::move(rhs),  mod,          std::move(source)};
}

std::vector<IdentityFixture> make_catalog() {
    std::vector<IdentityFixture> fixtures;

    fixtures.push_back(exact(
        "L4", "1/f1^4", "f4^14/(f2^14*f8^4)+4*q*f4^2*f8^4/f2^10",
        "Brietzke, da Silva, Sellers, Eq. (18)"));
    fixtures.push_back(exact(
        "L12", "f1^2", "f2*f8^5/(f4^2*f16^2)-2*q*f2*f16^2/f8",
        "da Silva, Sellers, Lemma 1, Eq. (12)"));
    fixtures.push_back(exact(
        "L3a", "1/(f1*f3)",
        "f8^2*f12^5/(f2^2*f4*f6^4*f24^2)+q*f4^5*f24^2/(f2^4*f6^2*f8^2*f12)",
        "Hirschhorn, The Power of q, Eq. (30.12.3)"));
    fixtures.push_back(exact(
        "L3b", "f1*f3",
        "f2*f8^2*f12^4/(f4^2*f6*f24^2)-q*f4^4*f6*f24^2/(f2*f8^2*f12^2)",
        "Hirschhorn, The Power of q, Eq. (30.12.1)"));

    fixtures.push_back(dissected(
        "D2_even", {{kPdo, 2, 0}}, kD2Even, std::nullopt,
        "Andrews, Lewis, Lovejoy, Theorem 21"));
    fixtures.push_back(dissected(
        "D2_odd", {{kPdo, 2, 1}}, kD2Odd, std::nullopt,
        "Andrews, Lewis, Lovejoy, Theorem 21"));

    // Each 4-dissection component is checked along two routes: straight off
    // the generating function, and as a 2-dissection of the matching
    // 2-dissection component.
    fixtures.push_back(dissected(
        "D4_0", {{kPdo, 4, 0}, {kD2Even, 2, 0}},
        "f4^4*f6^8/(f1^4*f3^4*f12^4)+q*f2^12*f12^4/(f1^8*f4^4*f6^4)",
        std::nullopt, "Baruah, Ojah, Theorem 1.3"));
    fixtures.push_back(dissected(
        "D4_1", {{kPdo, 4, 1}, {kD2Odd, 2, 0}},
        "f2^12*f6^2/(f1^8*f3^2*f4^4)", std::nullopt,
        "Baruah, Ojah, Theorem 1.3"));
    fixtures.push_back(dissected(
        "D4_2", {{kPdo, 4, 2}, {kD2Even, 2, 1}},
        "2*f2^6*f6^2/(f1^6*f3^2)", std::nullopt,
        "Baruah, Ojah, Theorem 1.3"));
    fixtures.push_back(dissected(
        "D4_3", {{kPdo, 4, 3}, {kD2Odd, 2, 1}},
        "4*f4^4*f6^2/(f1^4*f3^2)", std::nullopt,
        "Baruah, Ojah, Theorem 1.3"));

    fixtures.push_back(dissected(
        "M4_2n", {{kPdo, 2, 0}}, "f4^2/(f1^2*f3^2)", 4,
        "mod-4 reduction of the 2-dissection, even part"));
    fixtures.push_back(dissected(
        "M4_2n1", {{kPdo, 2, 1}}, "f6^2", 4,
        "mod-4 reduction of the 2-dissection, odd part"));
    fixtures.push_back(dissected(
        "M4_4n", {{kPdo, 4, 0}}, "(f2^3/f6)^2+q*f12^2", 4,
        "mod-4 form of the 4n component"));
    fixtures.push_back(dissected(
        "M4_4n2", {{kPdo, 4, 2}}, "2*f2^3*f6", 4,
        "mod-4 form of the 4n+2 component"));
    fixtures.push_back(dissected(
        "M4_8n", {{kPdo, 8, 0}}, "(f1^3/f3)^2", 4,
        "mod-4 form of the 8n component"));
    fixtures.push_back(dissected(
        "M4_8n4", {{kPdo, 8, 4}}, "f6^2", 4,
        "mod-4 form of the 8n+4 component"));
    fixtures.push_back(dissected(
        "M4_8n2", {{kPdo, 8, 2}}, "2*f1^3*f3", 4,
        "mod-4 form of the 8n+2 component"));
    fixtures.push_back(dissected(
        "M4_16n10", {{kPdo, 16, 10}}, "2*f3*f6^2", 4,
        "mod-4 form of the 16n+10 component"));
    fixtures.push_back(dissected(
        "PD2_16n12_mod4", {{kPdo, 16, 12}}, "0", 4,
        "vanishing of the 16n+12 component mod 4"));

    fixtures.push_back(dissected(
        "M8_4n3", {{kPdo, 4, 3}}, "4*f4^4*f6^2/(f2^2*f6)", 8,
        "mod-8 reduced form of the 4n+3 component"));
    fixtures.push_back(dissected(
        "M8_8n6", {{kPdo, 8, 6}}, "4*f2^11*f6^2/f4^4", 8,
        "mod-8 form of the 8n+6 component"));
    fixtures.push_back(dissected(
        "M8_16n12", {{kPdo, 16, 12}}, "4*f1^3*f3^5+4*q*f6^2*f12^4/f3^6", 8,
        "mod-8 form of the 16n+12 component"));
    fixtures.push_back(dissected(
        "M8_16n8", {{kPdo, 16, 8}}, "6*f1^6*f3^2", 8,
        "mod-8 form of the 16n+8 component"));
    fixtures.push_back(dissected(
        "M8_32n24", {{kPdo, 32, 24}}, "4*f6^2*f8/f2", 8,
        "mod-8 form of the 32n+24 component"));
    fixtures.push_back(dissected(
        "M8_4n_overall", {{kPdo, 4, 0}}, "(f4/(f1*f3))^4+q*(f12/f6)^4", 8,
        "mod-8 form of the 4n component"));
    fixtures.push_back(dissected(
        "M8_8n", {{kPdo, 8, 0}},
        "f8^4/(f2^4*f6^4)+6*q*f2^14*f6^10/(f2^8*f6^8)"
        "+q^2*f2^24*f24^4/(f2^8*f12^4*f4^8)",
        8, "mod-8 form of the 8n component"));

    return fixtures;
}

std::vector<IdentityFixture> make_negative_controls() {
    std::vector<IdentityFixture> fixtures;
    // The odd 2-dissection component is f6^2 mod 4 only; the same statement
    // mod 8 is false and must produce a witness.
    auto nc = dissected("NC_M4_2n1_mod8", {{kPdo, 2, 1}}, "f6^2", 8,
                        "over-strengthened modulus, expected to fail");
    nc.expect_failure = true;
    fixtures.push_back(std::move(nc));
    return fixtures;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

std::vector<TruncatedSeries> dissect(const TruncatedSeries& s, std::size_t m) {
    if (m == 0) throw std::invalid_argument("dissection modulus must be positive");
    std::vector<TruncatedSeries> parts;
    parts.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        parts.push_back(extract_progression(s, m, j));
    }
    return parts;
}

VerificationReport verify_fixture(const IdentityFixture& fixture,
                                  std::size_t order) {
    if (order < 2) throw std::invalid_argument("verification order must be >= 2");
    VerificationReport report;
    report.name = fixture.name;
    report.verified_bound = order;

    CoefficientRing ring = fixture.modulus
                               ? CoefficientRing::integers_mod(*fixture.modulus)
                               : CoefficientRing::integers();
    try {
        TruncatedSeries rhs = evaluate(parse(fixture.rhs), order, ring);

        auto check_route = [&](const TruncatedSeries& got,
                               const std::string& route) -> bool {
            if (auto diff = first_difference(got, rhs, order)) {
                report.outcome = Outcome::Fail;
                report.witness = Witness{diff->index, diff->lhs, diff->rhs};
                report.detail = "route " + route;
                return false;
            }
            return true;
        };

        if (fixture.lhs) {
            TruncatedSeries got = evaluate(parse(*fixture.lhs), order, ring);
            if (!check_route(got, "closed form")) return report;
        }
        for (const auto& ref : fixture.lhs_dissections) {
            std::size_t parent_order =
                static_cast<std::size_t>(ref.m) * order + ref.j;
            TruncatedSeries parent =
                evaluate(parse(ref.parent), parent_order, ring);
            TruncatedSeries component = extract_progression(parent, ref.m, ref.j);
            std::string route = "coefficients " + std::to_string(ref.m) + "n+" +
                                std::to_string(ref.j) + " of " + ref.parent;
            if (!check_route(component, route)) return report;
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        throw EvalError("fixture '" + fixture.name + "': " + e.what());
    }
    report.outcome = Outcome::Pass;
    return report;
}

const std::vector<IdentityFixture>& builtin_catalog() {
    static const std::vector<IdentityFixture> catalog = make_catalog();
    return catalog;
}

const std::vector<IdentityFixture>& negative_controls() {
    static const std::vector<IdentityFixture> controls = make_negative_controls();
    return controls;
}

std::vector<IdentityFixture> parse_identity_file(std::istream& in) {
    std::vector<IdentityFixture> fixtures;
    IdentityFixture current;
    bool open = false;
    std::size_t line_no = 0;

    auto flush = [&]() {
        if (!open) return;
        if (current.name.empty() || !current.lhs || current.rhs.empty()) {
            throw std::runtime_error(
                "identity file: each fixture needs name=, lhs= and rhs= lines");
        }
        fixtures.push_back(std::move(current));
        current = IdentityFixture{};
        open = false;
    };

    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty()) {
            flush();
            continue;
        }
        if (t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("identity file line " +
                                     std::to_string(line_no) +
                                     ": expected key=value");
        }
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        open = true;
        if (key == "name") {
            current.name = value;
        } else if (key == "lhs") {
            current.lhs = value;
        } else if (key == "rhs") {
            current.rhs = value;
        } else if (key == "mod") {
            current.modulus = std::stoull(value);
        } else if (key == "source") {
            current.source = value;
        } else {
            throw std::runtime_error("identity file line " +
                                     std::to_string(line_no) +
                                     ": unknown key '" + key + "'");
        }
    }
    flush();
    return fixtures;
}

std::vector<IdentityFixture> load_identity_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open identity file: " + path);
    return parse_identity_file(in);
}

} // namespace qdissect
