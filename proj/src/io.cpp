#include "isodyn/io.hpp"

#include "isodyn/errors.hpp"

namespace isodyn {

Json rat_to_json(const Rat& q) {
    return Json{{"n", q.get_num().get_str()}, {"d", q.get_den().get_str()}};
}

Rat rat_from_json(const Json& j) {
    const std::string n = j.at("n").get<std::string>();
    const std::string d = j.at("d").get<std::string>();
    if (d == "0") throw ConfigError("zero denominator in rational");
    return rat_from_string(n + "/" + d);
}

Json p1_to_json(const P1& p) {
    if (p.is_infinity()) return Json{{"n", "1"}, {"d", "0"}};
    return rat_to_json(p.value());
}

P1 p1_from_json(const Json& j) {
    if (j.at("d").get<std::string>() == "0") {
        if (j.at("n").get<std::string>() == "0") throw ConfigError("indeterminate projective point [0:0]");
        return P1::infinity();
    }
    return P1(rat_from_json(j));
}

Json mat_to_json(const RatMat& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMat mat_from_json(const Json& j) {
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    const Eigen::Index cols = rows > 0 ? static_cast<Eigen::Index>(j.at(0).size()) : 0;
    RatMat m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        if (static_cast<Eigen::Index>(j.at(static_cast<std::size_t>(r)).size()) != cols)
            throw ConfigError("ragged matrix");
        for (Eigen::Index c = 0; c < cols; ++c)
            m(r, c) = rat_from_json(j.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c)));
    }
    return m;
}

namespace {

Json rat_list_to_json(const std::vector<Rat>& values) {
    Json out = Json::array();
    for (const Rat& v : values) out.push_back(rat_to_json(v));
    return out;
}

std::vector<Rat> rat_list_from_json(const Json& j) {
    std::vector<Rat> out;
    for (const Json& v : j) out.push_back(rat_from_json(v));
    return out;
}

}  // namespace

Json scheme_to_json(const RiemannScheme& scheme) {
    Json poles = Json::array();
    for (std::size_t i = 0; i < scheme.poles.size(); ++i)
        poles.push_back(Json{{"z", rat_to_json(scheme.poles[i])}, {"indices", rat_list_to_json(scheme.indices[i])}});
    return Json{{"isodyn-schema", kSchemaVersion},
                {"poles", std::move(poles)},
                {"infinity", rat_list_to_json(scheme.infinity_indices)}};
}

RiemannScheme scheme_from_json(const Json& j) {
    RiemannScheme scheme;
    for (const Json& pole : j.at("poles")) {
        scheme.poles.push_back(rat_from_json(pole.at("z")));
        scheme.indices.push_back(rat_list_from_json(pole.at("indices")));
    }
    scheme.infinity_indices = rat_list_from_json(j.at("infinity"));
    return scheme;
}

Json point_to_json(const DecompositionPoint& point) {
    Json poles = Json::array();
    for (const auto& pole : point.poles)
        poles.push_back(Json{{"z", rat_to_json(pole.z)},
                             {"b", mat_to_json(pole.b)},
                             {"c_dag", mat_to_json(pole.c_dag)},
                             {"theta", rat_list_to_json(pole.theta)}});
    return Json{{"isodyn-schema", kSchemaVersion},
                {"size", point.size},
                {"poles", std::move(poles)},
                {"theta_inf", rat_list_to_json(point.theta_inf)}};
}

DecompositionPoint point_from_json(const Json& j) {
    DecompositionPoint point;
    point.size = j.at("size").get<Eigen::Index>();
    for (const Json& pole : j.at("poles")) {
        PoleData data;
        data.z = rat_from_json(pole.at("z"));
        data.b = mat_from_json(pole.at("b"));
        data.c_dag = mat_from_json(pole.at("c_dag"));
        data.theta = rat_list_from_json(pole.at("theta"));
        point.poles.push_back(std::move(data));
    }
    point.theta_inf = rat_list_from_json(j.at("theta_inf"));
    return point;
}

Json params_a2_to_json(const ParamsA2& params) {
    Json b = Json::array();
    for (const Rat& v : params.b) b.push_back(rat_to_json(v));
    return Json{{"model", "a2"}, {"b", std::move(b)}};
}

ParamsA2 params_a2_from_json(const Json& j) {
    ParamsA2 params;
    const Json& b = j.at("b");
    if (b.size() != 8) throw ConfigError("a2 parameters need 8 entries");
    for (std::size_t i = 0; i < 8; ++i) params.b[i] = rat_from_json(b.at(i));
    return params;
}

Json params_a1_to_json(const ParamsA1& params) {
    Json bi = Json::array();
    for (const Rat& v : params.bi) bi.push_back(rat_to_json(v));
    return Json{{"model", "a1"}, {"b", rat_to_json(params.b)}, {"bi", std::move(bi)}};
}

ParamsA1 params_a1_from_json(const Json& j) {
    ParamsA1 params;
    params.b = rat_from_json(j.at("b"));
    const Json& bi = j.at("bi");
    if (bi.size() != 8) throw ConfigError("a1 parameters need 8 entries");
    for (std::size_t i = 0; i < 8; ++i) params.bi[i] = rat_from_json(bi.at(i));
    return params;
}

}  // namespace isodyn
