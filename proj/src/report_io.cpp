#include "verlinde/report_io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace verlinde {

OutputRecord make_output_record(const DecompositionReport& rep, const std::string& query) {
    OutputRecord rec;
    rec.query = query;
    rec.moduli_rank = rep.moduli_rank;
    rec.level = rep.level;
    rec.h = rep.h;
    rec.r = rep.r;
    rec.k = rep.k;
    rec.has_q = rep.q.has_value();
    rec.q = rep.q.value_or(0);
    rec.line_bundle_split = rep.line_bundle_split;
    rec.theta_label = rep.theta_label;
    rec.has_theta_shift = rep.theta_twist_shift.has_value();
    rec.theta_shift = rep.theta_twist_shift.value_or(0);
    rec.rank_total = rep.rank_total;
    for (const auto& [sd, mult] : rep.summands) {
        SummandRecord s;
        s.order = sd.torsion.order();
        s.char_a = sd.torsion.a;
        s.char_b = sd.torsion.b;
        s.rank = sd.rank;
        s.det_degree = sd.det_degree;
        s.multiplicity = mult;
        s.num_characters = rep.table.character_counts.at(s.order);
        rec.summands.push_back(std::move(s));
    }
    std::sort(rec.summands.begin(), rec.summands.end(), [](const auto& a, const auto& b) {
        return std::tie(a.order, a.char_a, a.char_b) < std::tie(b.order, b.char_a, b.char_b);
    });
    return rec;
}

std::string to_json(const OutputRecord& rec) {
    nlohmann::json j;
    j["schema_version"] = rec.schema_version;
    j["query"] = rec.query;
    j["status"] = rec.status;
    j["moduli_rank"] = rec.moduli_rank;
    j["level"] = rec.level;
    j["h"] = rec.h;
    j["r"] = rec.r;
    j["k"] = rec.k;
    if (rec.has_q) j["q"] = rec.q;
    j["line_bundle_split"] = rec.line_bundle_split;
    if (!rec.theta_label.empty()) j["theta_label"] = rec.theta_label;
    if (rec.has_theta_shift) j["det_n_degree_shift"] = rec.theta_shift;
    j["rank_total"] = rec.rank_total.get_str();
    nlohmann::json arr = nlohmann::json::array();
    for (const SummandRecord& s : rec.summands) {
        nlohmann::json e;
        e["order"] = s.order;
        e["character_rep"] = {s.char_a, s.char_b};
        e["rank"] = s.rank;
        e["det_degree"] = s.det_degree;
        e["multiplicity"] = rat_to_string(s.multiplicity);
        e["num_characters"] = s.num_characters;
        arr.push_back(std::move(e));
    }
    j["summands"] = std::move(arr);
    return j.dump(2);
}

OutputRecord from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    OutputRecord rec;
    rec.schema_version = j.at("schema_version").get<std::string>();
    rec.query = j.at("query").get<std::string>();
    rec.status = j.at("status").get<std::string>();
    rec.moduli_rank = j.at("moduli_rank").get<unsigned>();
    rec.level = j.at("level").get<unsigned>();
    rec.h = j.at("h").get<unsigned>();
    rec.r = j.at("r").get<unsigned>();
    rec.k = j.at("k").get<unsigned>();
    rec.has_q = j.contains("q");
    if (rec.has_q) rec.q = j.at("q").get<unsigned>();
    rec.line_bundle_split = j.at("line_bundle_split").get<bool>();
    if (j.contains("theta_label")) rec.theta_label = j.at("theta_label").get<std::string>();
    rec.has_theta_shift = j.contains("det_n_degree_shift");
    if (rec.has_theta_shift) rec.theta_shift = j.at("det_n_degree_shift").get<int>();
    rec.rank_total = Int(j.at("rank_total").get<std::string>());
    for (const auto& e : j.at("summands")) {
        SummandRecord s;
        s.order = e.at("order").get<unsigned>();
        s.char_a = e.at("character_rep").at(0).get<unsigned>();
        s.char_b = e.at("character_rep").at(1).get<unsigned>();
        s.rank = e.at("rank").get<unsigned>();
        s.det_degree = e.at("det_degree").get<long>();
        s.multiplicity = rat_from_string(e.at("multiplicity").get<std::string>());
        s.num_characters = e.at("num_characters").get<unsigned>();
        rec.summands.push_back(std::move(s));
    }
    return rec;
}

std::string to_csv(const OutputRecord& rec) {
    std::ostringstream os;
    os << "order,char_a,char_b,rank,det_degree,multiplicity\n";
    for (const SummandRecord& s : rec.summands)
        os << s.order << "," << s.char_a << "," << s.char_b << "," << s.rank << ","
           << s.det_degree << "," << rat_to_string(s.multiplicity) << "\n";
    return os.str();
}

std::string to_text(const OutputRecord& rec) {
    std::ostringstream os;
    os << "E_{" << rec.moduli_rank << "," << rec.level << "}: h=" << rec.h << " r=" << rec.r
       << " k=" << rec.k;
    if (rec.has_q) os << " q=" << rec.q;
    os << "\n";
    if (!rec.theta_label.empty()) os << "twist: " << rec.theta_label;
    if (rec.has_theta_shift) os << "  (det N degree shift " << rec.theta_shift << ")";
    if (!rec.theta_label.empty() || rec.has_theta_shift) os << "\n";
    for (const SummandRecord& s : rec.summands) {
        os << "  order " << s.order << "  char (" << s.char_a << "," << s.char_b << ")  ";
        if (s.rank == 1)
            os << "Theta^" << s.det_degree << " (x) L_xi";
        else
            os << "W_{" << s.rank << "," << s.det_degree << ",xi}";
        os << "  x " << rat_to_string(s.multiplicity) << "   [" << s.num_characters
           << " character(s) of this order]\n";
    }
    os << "rank total: " << rec.rank_total.get_str() << "\n";
    os << "splits into line bundles: " << (rec.line_bundle_split ? "yes" : "no") << "\n";
    return os.str();
}

}  // namespace verlinde
