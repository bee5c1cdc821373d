#include "tough/synth.hpp"

namespace tough {

using nlohmann::json;

json to_json(const Certificate& c)
{
    const auto& p = c.plan;
    json blocks = json::array();
    for (BlockKind k : p.blocks)
        blocks.push_back(to_string(k));
    json nonham = {{"kind", to_string(c.nonhamiltonicity.kind)}};
    for (const auto& [key, value] : c.nonhamiltonicity.params)
        nonham[key] = value;
    return {
        {"t", p.target.str()},
        {"case", to_string(p.case_id)},
        {"q", p.q},
        {"a_scaled", p.a_scaled},
        {"b_scaled", p.b_scaled},
        {"l", p.l},
        {"m", p.m},
        {"m1", p.m1 ? json(*p.m1) : json(nullptr)},
        {"m2", p.m2 ? json(*p.m2) : json(nullptr)},
        {"blocks", blocks},
        {"nonhamiltonicity", nonham},
        {"cutset", c.witness.cutset},
        {"components", c.witness.component_count},
        {"predicted_tau", c.predicted_tau.str()},
        {"notes", c.notes},
    };
}

Certificate certificate_from_json(const json& j)
{
    static const std::vector<std::string> keys = {"t", "case", "q", "a_scaled", "b_scaled", "l", "m", "m1",
                                                  "m2", "blocks", "nonhamiltonicity", "cutset", "components",
                                                  "predicted_tau", "notes"};
    try {
        if (!j.is_object())
            throw CertificateError("certificate must be a JSON object");
        for (const auto& k : keys)
            if (!j.contains(k))
                throw CertificateError("certificate is missing key '" + k + "'");
        if (j.size() != keys.size())
            throw CertificateError("certificate has unexpected keys");

        Certificate c;
        auto& p = c.plan;
        p.target = Rational::parse(j.at("t").get<std::string>());
        p.case_id = parse_case_id(j.at("case").get<std::string>());
        p.q = j.at("q").get<std::int64_t>();
        p.a_scaled = j.at("a_scaled").get<std::int64_t>();
        p.b_scaled = j.at("b_scaled").get<std::int64_t>();
        p.l = j.at("l").get<int>();
        p.m = j.at("m").get<int>();
        if (!j.at("m1").is_null())
            p.m1 = j.at("m1").get<int>();
        if (!j.at("m2").is_null())
            p.m2 = j.at("m2").get<int>();
        for (const auto& k : j.at("blocks"))
            p.blocks.push_back(parse_block_kind(k.get<std::string>()));

        const auto& nh = j.at("nonhamiltonicity");
        if (!nh.is_object())
            throw CertificateError("nonhamiltonicity must be an object");
        c.nonhamiltonicity.kind = parse_nonham_kind(nh.at("kind").get<std::string>());
        for (const auto& [key, value] : nh.items())
            if (key != "kind")
                c.nonhamiltonicity.params[key] = value.get<std::int64_t>();

        c.witness.cutset = j.at("cutset").get<std::vector<Vertex>>();
        c.witness.component_count = j.at("components").get<int>();
        c.predicted_tau = Rational::parse(j.at("predicted_tau").get<std::string>());
        if (c.witness.component_count > 0)
            c.witness.ratio = Rational(static_cast<std::int64_t>(c.witness.cutset.size()), c.witness.component_count);
        c.notes = j.at("notes").get<std::vector<std::string>>();
        return c;
    } catch (const json::exception& ex) {
        throw CertificateError(std::string("certificate JSON: ") + ex.what());
    } catch (const RationalError& ex) {
        throw CertificateError(std::string("certificate rational: ") + ex.what());
    } catch (const SynthesisError& ex) {
        throw CertificateError(std::string("certificate: ") + ex.what());
    } catch (const GraphError& ex) {
        throw CertificateError(std::string("certificate: ") + ex.what());
    }
}

}  // namespace tough
