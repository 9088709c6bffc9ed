#include "brt/report.hpp"

#include <sstream>

namespace brt {

nlohmann::json integer_to_json(const Integer& n) {
    if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
    return n.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    return Integer(static_cast<long>(j.get<std::int64_t>()));
}

std::string report_to_text(const RestrictionReport& r) {
    std::ostringstream out;
    out << "group order:        " << r.group_order.get_str() << "\n";
    out << "subgroup order:     " << r.subgroup_order.get_str() << "\n";
    out << "prime:              " << r.prime << "\n";
    out << "r_G = #IBr(G):      " << r.r_g << "\n";
    out << "r_H = #IBr(H):      " << r.r_h << "\n";
    out << "coverage:           " << (r.coverage ? "yes" : "no") << "\n";
    out << "injective:          " << (r.injective ? "yes" : "no") << "\n";
    out << "criterion agrees:   " << (r.theorem_a_consistent ? "yes" : "no") << "\n";
    out << "class bijection:    " << (r.class_meet_bijection ? "yes" : "no") << "\n";
    out << "image index:        " << (r.image_index ? r.image_index->get_str() : "infinite")
        << "\n";
    out << "isomorphism:        " << (r.isomorphism ? "yes" : "no") << "\n";
    return out.str();
}

nlohmann::json report_to_json(const RestrictionReport& r) {
    nlohmann::json j;
    j["group_order"] = integer_to_json(r.group_order);
    j["subgroup_order"] = integer_to_json(r.subgroup_order);
    j["prime"] = r.prime;
    j["r_g"] = r.r_g;
    j["r_h"] = r.r_h;
    j["coverage"] = r.coverage;
    j["injective"] = r.injective;
    j["theorem_a_consistent"] = r.theorem_a_consistent;
    j["class_meet_bijection"] = r.class_meet_bijection;
    j["image_index"] = r.image_index ? integer_to_json(*r.image_index) : nlohmann::json();
    j["isomorphism"] = r.isomorphism;
    return j;
}

RestrictionReport report_from_json(const nlohmann::json& j) {
    RestrictionReport r;
    r.group_order = integer_from_json(j.at("group_order"));
    r.subgroup_order = integer_from_json(j.at("subgroup_order"));
    r.prime = j.at("prime").get<std::uint64_t>();
    r.r_g = j.at("r_g").get<int>();
    r.r_h = j.at("r_h").get<int>();
    r.coverage = j.at("coverage").get<bool>();
    r.injective = j.at("injective").get<bool>();
    r.theorem_a_consistent = j.at("theorem_a_consistent").get<bool>();
    r.class_meet_bijection = j.at("class_meet_bijection").get<bool>();
    if (!j.at("image_index").is_null()) r.image_index = integer_from_json(j.at("image_index"));
    r.isomorphism = j.at("isomorphism").get<bool>();
    return r;
}

nlohmann::json group_provenance_json(const std::string& spec, const PermGroup& g,
                                     std::uint64_t cap) {
    nlohmann::json j;
    j["spec"] = spec;
    j["order"] = integer_to_json(g.order());
    nlohmann::json classes = nlohmann::json::array();
    for (const ConjugacyClass& c : g.classes(cap)) {
        nlohmann::json cls;
        cls["representative"] = c.representative.cycle_string();
        cls["size"] = c.size;
        cls["element_order"] = c.element_order;
        classes.push_back(std::move(cls));
    }
    j["classes"] = std::move(classes);
    return j;
}

std::string table_to_text(const CharacterTable& table) {
    std::ostringstream out;
    out << "order: " << table.group.order().get_str() << "\n";
    out << "classes: " << table.class_count() << "\n";
    const auto& classes = table.group.classes();
    for (std::size_t i = 0; i < classes.size(); ++i)
        out << "class " << i + 1 << ": rep=" << classes[i].representative.cycle_string()
            << " size=" << classes[i].size << " order=" << classes[i].element_order << "\n";
    for (std::size_t i = 0; i < table.irreducibles.size(); ++i) {
        out << "chi_" << i + 1 << " (degree " << table.degrees[i] << "):";
        for (const Cyclotomic& v : table.irreducibles[i].values) out << " [" << v.to_string() << "]";
        out << "\n";
    }
    return out.str();
}

nlohmann::json table_to_json(const CharacterTable& table) {
    nlohmann::json j;
    j["order"] = integer_to_json(table.group.order());
    nlohmann::json classes = nlohmann::json::array();
    for (const ConjugacyClass& c : table.group.classes()) {
        nlohmann::json cls;
        cls["representative"] = c.representative.cycle_string();
        cls["size"] = c.size;
        cls["element_order"] = c.element_order;
        classes.push_back(std::move(cls));
    }
    j["classes"] = std::move(classes);
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < table.irreducibles.size(); ++i) {
        nlohmann::json row;
        row["degree"] = table.degrees[i];
        nlohmann::json values = nlohmann::json::array();
        for (const Cyclotomic& v : table.irreducibles[i].values) values.push_back(v.to_string());
        row["values"] = std::move(values);
        rows.push_back(std::move(row));
    }
    j["irreducibles"] = std::move(rows);
    return j;
}

}  // namespace brt
