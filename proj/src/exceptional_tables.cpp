#include <json.hpp>

#include <cctype>
#include <string>

#include "nilorb/chevalley.hpp"
#include "nilorb/errors.hpp"
#include "nilorb/tables_json.hpp"

namespace nilorb::chev {

const std::string& tables_json() {
    static const std::string text(kTablesJson);
    return text;
}

std::vector<RationalClassRow> table(Group g) {
    static const nlohmann::json doc = nlohmann::json::parse(tables_json());
    std::vector<RationalClassRow> rows;
    for (const auto& jr : doc.at("groups").at(group_name(g)).at("rows")) {
        RationalClassRow row;
        row.orbit = jr.at("orbit").get<std::string>();
        row.label = jr.at("label").get<std::string>();
        for (const auto& jt : jr.at("terms")) row.terms.push_back({jt.at("root").get<RootVec>(), jt.at("coeff").get<std::string>()});
        row.centralizer_text = jr.at("centralizer").get<std::string>();
        row.centralizer = QPoly::parse(row.centralizer_text);
        rows.push_back(std::move(row));
    }
    return rows;
}

MassReport mass_check(const std::vector<RationalClassRow>& rows, const QPoly& group_order, int num_positive) {
    MassReport r;
    r.expected = QPoly::monomial(1, 2 * num_positive);
    for (const auto& row : rows) {
        QPoly rem;
        const QPoly orbit = group_order.divmod(row.centralizer, rem);
        if (!rem.is_zero()) {
            r.problems.push_back(row.label + ": |Z| = " + row.centralizer_text + " does not divide |G|");
            continue;
        }
        r.sum += orbit;
    }
    r.ok = r.problems.empty() && r.sum == r.expected;
    if (r.problems.empty() && !r.ok) r.problems.push_back("sum is " + r.sum.str() + ", expected " + r.expected.str());
    return r;
}

MassReport mass_check(Group g) {
    const auto rows = table(g);
    const RationalClassRow* zero = nullptr;
    for (const auto& row : rows)
        if (row.terms.empty()) zero = &row;
    if (zero == nullptr) throw Error(ErrorKind::InternalConsistency, "table has no zero-orbit row");
    return mass_check(rows, zero->centralizer, RootSystem::make(g).num_positive());
}

int field_parameter(const std::string& symbol, const FiniteField& f) {
    std::vector<bool> image(static_cast<std::size_t>(f.q()), false);
    for (int y = 0; y < f.q(); ++y) {
        int v = 0;
        if (symbol == "eta")
            v = f.add(f.mul(y, y), y);
        else if (symbol == "zeta")
            v = f.mul(y, y);
        else if (symbol == "varpi")
            v = f.add(f.pow(y, 3), y);
        else
            throw Error(ErrorKind::Parse, "unknown field parameter '" + symbol + "'");
        image[static_cast<std::size_t>(v)] = true;
    }
    for (int x = 0; x < f.q(); ++x)
        if (!image[static_cast<std::size_t>(x)]) return x;
    throw Error(ErrorKind::ParameterUnavailable,
                symbol + " does not exist over F_" + std::to_string(f.q()) + ": the defining map is surjective");
}

std::vector<int> materialize_rep(const ChevalleyRep& rep, const RationalClassRow& row, const FiniteField& f) {
    std::vector<int> v(static_cast<std::size_t>(rep.dim), 0);
    for (const Term& t : row.terms) {
        const int idx = rep.roots.index_of(t.root);
        if (idx < 0 || idx >= rep.roots.num_positive())
            throw Error(ErrorKind::Domain, row.label + ": term is not on a positive root");
        std::string name = t.coeff;
        const bool neg = !name.empty() && name[0] == '-';
        if (neg) name.erase(0, 1);
        int c = 0;
        if (!name.empty() && std::isdigit(static_cast<unsigned char>(name[0])))
            c = f.from_int(std::stoll(name));
        else
            c = field_parameter(name, f);
        if (neg) c = f.neg(c);
        auto& slot = v[static_cast<std::size_t>(rep.dual_coord(idx))];
        slot = f.add(slot, c);
    }
    return v;
}

}  // namespace nilorb::chev
