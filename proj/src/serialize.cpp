#include "wc/serialize.hpp"

#include <sstream>

namespace wc {

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json json_int(const mpz_class& v) {
    if (v.fits_slong_p()) return Json(static_cast<long>(v.get_si()));
    return Json(v.get_str());
}

mpz_class int_from_json(const Json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long>()));
    throw std::invalid_argument("int_from_json: expected integer or string");
}

Json json_rat(const mpq_class& v) {
    return Json(v.get_num().get_str() + "/" + v.get_den().get_str());
}

mpq_class rat_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("rat_from_json: expected string");
    mpq_class q(j.get<std::string>());
    q.canonicalize();
    return q;
}

Json json_poly(const IntPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(json_int(c));
    return arr;
}

IntPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("poly_from_json: expected array");
    std::vector<mpz_class> c;
    for (const auto& e : j) c.push_back(int_from_json(e));
    return IntPoly(std::move(c));
}

Json json_field_element(const FieldElement& x) {
    Json arr = Json::array();
    for (const auto& q : x.coeffs()) arr.push_back(json_rat(q));
    return arr;
}

FieldElement field_element_from_json(const Json& j, const FieldPtr& field) {
    if (!j.is_array())
        throw std::invalid_argument("field_element_from_json: expected array");
    std::vector<mpq_class> c;
    for (const auto& e : j) c.push_back(rat_from_json(e));
    if (c.size() <= 1) return c.empty() ? FieldElement() : FieldElement(c[0]);
    return FieldElement(field, std::move(c));
}

Json json_field_vec(const Vec<FieldElement>& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(json_field_element(x));
    return arr;
}

Vec<FieldElement> field_vec_from_json(const Json& j, const FieldPtr& field) {
    if (!j.is_array()) throw std::invalid_argument("field_vec_from_json: expected array");
    Vec<FieldElement> v;
    for (const auto& e : j) v.push_back(field_element_from_json(e, field));
    return v;
}

Json json_field_mat(const Mat<FieldElement>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(json_field_element(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat<FieldElement> field_mat_from_json(const Json& j, const FieldPtr& field) {
    if (!j.is_array()) throw std::invalid_argument("field_mat_from_json: expected array");
    const int rows = static_cast<int>(j.size());
    const int cols = rows ? static_cast<int>(j[0].size()) : 0;
    Mat<FieldElement> m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols)
            throw std::invalid_argument("field_mat_from_json: ragged rows");
        for (int k = 0; k < cols; ++k)
            m(i, k) = field_element_from_json(j[i][k], field);
    }
    return m;
}

Json json_int_mat(const Mat<mpz_class>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(json_int(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat<mpz_class> int_mat_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("int_mat_from_json: expected array");
    const int rows = static_cast<int>(j.size());
    const int cols = rows ? static_cast<int>(j[0].size()) : 0;
    Mat<mpz_class> m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols)
            throw std::invalid_argument("int_mat_from_json: ragged rows");
        for (int k = 0; k < cols; ++k) m(i, k) = int_from_json(j[i][k]);
    }
    return m;
}

Json json_interval(const RationalInterval& iv) {
    return Json{{"lo", json_rat(iv.lo)}, {"hi", json_rat(iv.hi)}};
}

RationalInterval interval_from_json(const Json& j) {
    return {rat_from_json(j.at("lo")), rat_from_json(j.at("hi"))};
}

Json json_tuple(const MarkedTuple& tuple) {
    return Json{{"schema", kSchemaName},
                {"p", tuple.context->p},
                {"q", tuple.context->q},
                {"r", tuple.context->r},
                {"salem_poly", json_poly(tuple.field->poly())},
                {"base_shifts", json_field_vec(tuple.base_shifts)},
                {"point_params", json_field_vec(tuple.point_params)}};
}

MarkedTuple tuple_from_json(const Json& j) {
    auto ctx = build_lattice(j.at("p").get<int>(), j.at("q").get<int>(),
                             j.at("r").get<int>());
    auto field = make_salem_field(poly_from_json(j.at("salem_poly")));
    MarkedTuple tuple;
    tuple.context = ctx;
    tuple.field = field;
    tuple.base_shifts = field_vec_from_json(j.at("base_shifts"), field);
    tuple.point_params = field_vec_from_json(j.at("point_params"), field);
    return tuple;
}

Json json_uc(const UCCertificate& cert) {
    Json j{{"ok", cert.ok},
           {"bound", cert.bound},
           {"roots_checked", cert.roots_checked}};
    if (cert.failing_root) {
        Json arr = Json::array();
        for (const auto& c : *cert.failing_root) arr.push_back(json_int(c));
        j["failing_root"] = std::move(arr);
    }
    if (cert.min_abs_lower) j["min_abs_lower"] = json_rat(*cert.min_abs_lower);
    return j;
}

UCCertificate uc_from_json(const Json& j) {
    UCCertificate cert;
    cert.ok = j.at("ok").get<bool>();
    cert.bound = j.at("bound").get<long>();
    cert.roots_checked = j.at("roots_checked").get<size_t>();
    if (j.contains("failing_root")) {
        Vec<mpz_class> v;
        for (const auto& e : j["failing_root"]) v.push_back(int_from_json(e));
        cert.failing_root = std::move(v);
    }
    if (j.contains("min_abs_lower"))
        cert.min_abs_lower = rat_from_json(j["min_abs_lower"]);
    return cert;
}

Json json_realization(const RealizationCertificate& cert) {
    return Json{{"ok", cert.ok},
                {"detail", cert.detail},
                {"scaling", json_field_element(cert.scaling)},
                {"matrix", json_field_mat(cert.matrix)},
                {"factor_map", cert.factor_map}};
}

RealizationCertificate realization_from_json(const Json& j, const FieldPtr& field) {
    RealizationCertificate cert;
    cert.ok = j.at("ok").get<bool>();
    cert.detail = j.at("detail").get<std::string>();
    cert.scaling = field_element_from_json(j.at("scaling"), field);
    cert.matrix = field_mat_from_json(j.at("matrix"), field);
    cert.factor_map = j.at("factor_map").get<std::vector<int>>();
    return cert;
}

Json json_degree_report(const DegreeReport& rep) {
    Json pred = Json::array(), meas = Json::array();
    for (const auto& m : rep.predicted) pred.push_back(json_int_mat(m));
    for (const auto& m : rep.measured) meas.push_back(json_int_mat(m));
    return Json{{"iterations", rep.iterations},
                {"match", rep.match},
                {"inverse_direction", rep.inverse_direction},
                {"growth_ok", rep.growth_ok},
                {"predicted", std::move(pred)},
                {"measured", std::move(meas)},
                {"detail", rep.detail}};
}

DegreeReport degree_report_from_json(const Json& j) {
    DegreeReport rep;
    rep.iterations = j.at("iterations").get<int>();
    rep.match = j.at("match").get<bool>();
    rep.inverse_direction = j.at("inverse_direction").get<bool>();
    rep.growth_ok = j.at("growth_ok").get<bool>();
    for (const auto& e : j.at("predicted")) rep.predicted.push_back(int_mat_from_json(e));
    for (const auto& e : j.at("measured")) rep.measured.push_back(int_mat_from_json(e));
    rep.detail = j.at("detail").get<std::string>();
    return rep;
}

namespace {

std::string mat_cell(const Mat<mpz_class>& m) {
    std::ostringstream os;
    if (m.rows() == 1 && m.cols() == 1) {
        os << m(0, 0);
        return os.str();
    }
    os << "[";
    for (int a = 0; a < m.rows(); ++a) {
        if (a) os << "; ";
        for (int b = 0; b < m.cols(); ++b) os << (b ? " " : "") << m(a, b);
    }
    os << "]";
    return os.str();
}

mpz_class max_entry(const Mat<mpz_class>& m) {
    mpz_class v = 0;
    for (int a = 0; a < m.rows(); ++a)
        for (int b = 0; b < m.cols(); ++b) v = std::max(v, m(a, b));
    return v;
}

}  // namespace

std::string degree_report_table(const DegreeReport& rep) {
    std::ostringstream os;
    os << "  k  measured        predicted       ratio\n";
    for (int k = 0; k < static_cast<int>(rep.measured.size()); ++k) {
        std::string meas = mat_cell(rep.measured[k]);
        std::string pred = k < static_cast<int>(rep.predicted.size())
                               ? mat_cell(rep.predicted[k])
                               : "-";
        std::string ratio = "-";
        if (k > 0) {
            mpq_class q(max_entry(rep.measured[k]), max_entry(rep.measured[k - 1]));
            q.canonicalize();
            ratio = q.get_str();
        }
        os << "  " << (k + 1);
        os << std::string(k + 1 >= 10 ? 1 : 2, ' ');
        os << meas << std::string(meas.size() < 15 ? 16 - meas.size() : 1, ' ');
        os << pred << std::string(pred.size() < 15 ? 16 - pred.size() : 1, ' ');
        os << ratio << "\n";
    }
    os << "  match=" << (rep.match ? "yes" : "no")
       << " growth_ok=" << (rep.growth_ok ? "yes" : "no")
       << " direction=" << (rep.inverse_direction ? "inverse" : "forward") << "\n";
    return os.str();
}

}  // namespace wc
