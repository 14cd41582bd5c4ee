#include "homint/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace homint {

namespace {

Int int_from_json(const Json& j, const char* what) {
    if (j.is_string()) return int_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    throw std::invalid_argument(std::string(what) +
                                ": expected a decimal string or integer");
}

std::uint64_t uint_from_json(const Json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        throw std::invalid_argument(std::string(what) +
                                    ": expected a nonnegative integer");
    return j.get<std::uint64_t>();
}

}  // namespace

Json poly_to_json(const HomogeneousPoly& f) {
    Json j;
    j["n"] = f.var_count();
    j["degree"] = f.degree();
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) {
        Json t;
        t["exps"] = e;
        t["coeff"] = c.get_str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    if (f.modulus()) j["modulus"] = f.modulus()->get_str();
    return j;
}

HomogeneousPoly poly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("degree") ||
        !j.contains("terms"))
        throw std::invalid_argument("polynomial: need n, degree, terms");
    int n = static_cast<int>(uint_from_json(j.at("n"), "polynomial n"));
    if (n < 1) throw std::invalid_argument("polynomial: n must be >= 1");
    std::uint64_t degree = uint_from_json(j.at("degree"), "polynomial degree");
    std::optional<Int> modulus;
    if (j.contains("modulus")) {
        modulus = int_from_json(j.at("modulus"), "polynomial modulus");
        if (*modulus < 2)
            throw std::invalid_argument("polynomial: modulus must be >= 2");
    }
    if (!j.at("terms").is_array())
        throw std::invalid_argument("polynomial: terms must be an array");
    std::vector<std::pair<Exponents, Int>> terms;
    for (const Json& t : j.at("terms")) {
        if (!t.is_object() || !t.contains("exps") || !t.contains("coeff"))
            throw std::invalid_argument("polynomial: term needs exps and coeff");
        Exponents e;
        for (const Json& x : t.at("exps"))
            e.push_back(static_cast<std::uint32_t>(
                uint_from_json(x, "polynomial exponent")));
        if (static_cast<int>(e.size()) != n)
            throw std::invalid_argument("polynomial: exponent arity mismatch");
        std::uint64_t total = 0;
        for (auto x : e) total += x;
        if (total != degree)
            throw std::invalid_argument(
                "polynomial: term is not homogeneous of the stated degree");
        terms.emplace_back(std::move(e), int_from_json(t.at("coeff"), "coefficient"));
    }
    return HomogeneousPoly::from_terms(n, degree, terms, modulus);
}

InterpolationInstance instance_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("points") || !j.at("points").is_array() ||
        j.at("points").empty())
        throw std::invalid_argument("instance: need a nonempty points array");
    std::vector<Point> pts;
    int n = -1;
    for (const Json& row : j.at("points")) {
        if (!row.is_array() || row.empty())
            throw std::invalid_argument("instance: each point is a nonempty array");
        Point p;
        for (const Json& c : row)
            p.coords.push_back(int_from_json(c, "point coordinate"));
        if (n < 0) n = p.dim();
        if (p.dim() != n)
            throw std::invalid_argument("instance: points have mixed dimensions");
        pts.push_back(std::move(p));
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (!pts[i].has_coprime_entries())
            throw std::invalid_argument("instance: point " + std::to_string(i) +
                                        " entries not coprime");
    std::vector<Int> targets;
    if (j.contains("targets")) {
        if (!j.at("targets").is_array() || j.at("targets").size() != pts.size())
            throw std::invalid_argument(
                "instance: targets must align with points");
        for (const Json& t : j.at("targets"))
            targets.push_back(int_from_json(t, "target"));
    } else {
        targets.assign(pts.size(), Int(1));
    }
    return InterpolationInstance::make(std::move(pts), n, std::move(targets));
}

Json instance_to_json(const InterpolationInstance& inst) {
    Json j;
    Json pts = Json::array();
    for (const auto& p : inst.points.originals()) {
        Json row = Json::array();
        for (const Int& c : p.coords) row.push_back(c.get_str());
        pts.push_back(std::move(row));
    }
    j["points"] = std::move(pts);
    Json tg = Json::array();
    for (const Int& t : inst.targets) tg.push_back(t.get_str());
    j["targets"] = std::move(tg);
    return j;
}

Json certificate_to_json(const Certificate& cert) {
    Json j;
    if (cert.is_snf()) {
        const SnfCertificate& c = cert.snf();
        j["kind"] = "snf_nonmembership";
        j["degree"] = c.degree;
        Json diag = Json::array();
        for (const Int& d : c.diagonal) diag.push_back(d.get_str());
        j["diagonal"] = std::move(diag);
        Json tt = Json::array();
        for (const Int& t : c.transformed_target) tt.push_back(t.get_str());
        j["transformed_target"] = std::move(tt);
        j["failure_index"] = c.failure_index;
    } else {
        const PeriodicCertificate& c = cert.periodic();
        j["kind"] = "modular_periodic";
        j["prime"] = c.prime.get_str();
        j["period"] = c.period;
        j["stabilization_degree"] = c.stabilization_degree;
        auto checks = [](const std::vector<std::pair<std::uint64_t, bool>>& v) {
            Json arr = Json::array();
            for (const auto& [d, member] : v)
                arr.push_back(Json{{"degree", d}, {"target_in_image", member}});
            return arr;
        };
        j["class_checks"] = checks(c.class_checks);
        j["low_degree_checks"] = checks(c.low_degree_checks);
    }
    return j;
}

Certificate certificate_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("certificate: missing kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "snf_nonmembership") {
        SnfCertificate c;
        c.degree = uint_from_json(j.at("degree"), "certificate degree");
        for (const Json& d : j.at("diagonal"))
            c.diagonal.push_back(int_from_json(d, "diagonal entry"));
        for (const Json& t : j.at("transformed_target"))
            c.transformed_target.push_back(int_from_json(t, "transformed target"));
        c.failure_index = j.at("failure_index").get<long>();
        return Certificate{std::move(c)};
    }
    if (kind == "modular_periodic") {
        PeriodicCertificate c;
        c.prime = int_from_json(j.at("prime"), "certificate prime");
        c.period = uint_from_json(j.at("period"), "certificate period");
        c.stabilization_degree =
            uint_from_json(j.at("stabilization_degree"), "stabilization degree");
        auto checks = [](const Json& arr) {
            std::vector<std::pair<std::uint64_t, bool>> out;
            for (const Json& x : arr)
                out.emplace_back(uint_from_json(x.at("degree"), "check degree"),
                                 x.at("target_in_image").get<bool>());
            return out;
        };
        c.class_checks = checks(j.at("class_checks"));
        c.low_degree_checks = checks(j.at("low_degree_checks"));
        return Certificate{std::move(c)};
    }
    throw std::invalid_argument("certificate: unknown kind '" + kind + "'");
}

namespace {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return j;
}

}  // namespace

HomogeneousPoly read_poly_file(const std::string& path) {
    return poly_from_json(read_json_file(path));
}

InterpolationInstance read_instance_file(const std::string& path) {
    return instance_from_json(read_json_file(path));
}

}  // namespace homint
