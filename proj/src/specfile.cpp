#include "c0embed/specfile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "c0embed/error.hpp"

namespace c0embed {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw ParseError("spec" + path + ": " + message);
}

void require_keys(const Json& obj, const std::string& path,
                  std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed)
            if (key == a) known = true;
        if (!known) fail(path + "/" + key, "unknown key");
    }
}

double parse_number(const Json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

int parse_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
}

Complex parse_complex(const Json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail(path, "expected a complex scalar as a [re, im] pair");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

std::vector<Complex> parse_complex_list(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of [re, im] pairs");
    std::vector<Complex> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_complex(j[i], path + "/" + std::to_string(i)));
    return out;
}

CardinalDim parse_cardinal(const Json& j, const std::string& path) {
    if (j.is_string()) {
        if (j.get<std::string>() == "infinite") return CardinalDim::infinite();
        fail(path, "expected a nonnegative integer or \"infinite\"");
    }
    if (j.is_number_integer() && j.get<long long>() >= 0)
        return CardinalDim::finite(static_cast<std::size_t>(j.get<long long>()));
    fail(path, "expected a nonnegative integer or \"infinite\"");
}

StructuredOperator parse_operator(const Json& j, const std::string& path);

StructuredOperator parse_operator_node(const Json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    if (!j.contains("type")) fail(path, "missing \"type\"");
    if (!j["type"].is_string()) fail(path + "/type", "expected a string");
    const std::string type = j["type"].get<std::string>();

    try {
        if (type == "dense") {
            require_keys(j, path, {"type", "entries"});
            if (!j.contains("entries")) fail(path, "missing \"entries\"");
            const Json& rows = j["entries"];
            if (!rows.is_array() || rows.empty()) fail(path + "/entries", "expected rows");
            const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
            Matrix m(n, n);
            for (Eigen::Index r = 0; r < n; ++r) {
                const std::string rpath = path + "/entries/" + std::to_string(r);
                if (!rows[static_cast<std::size_t>(r)].is_array() ||
                    static_cast<Eigen::Index>(rows[static_cast<std::size_t>(r)].size()) != n)
                    fail(rpath, "dense rows must form a square matrix");
                for (Eigen::Index c = 0; c < n; ++c)
                    m(r, c) = parse_complex(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)],
                                            rpath + "/" + std::to_string(c));
            }
            return Dense{MatrixOperator(std::move(m))};
        }
        if (type == "diagonal") {
            require_keys(j, path, {"type", "eigenvalues", "kernel_dim", "cokernel_dim"});
            if (!j.contains("eigenvalues")) fail(path, "missing \"eigenvalues\"");
            Diagonal d;
            d.eigenvalues = parse_complex_list(j["eigenvalues"], path + "/eigenvalues");
            if (j.contains("kernel_dim"))
                d.kernel_dim = parse_cardinal(j["kernel_dim"], path + "/kernel_dim");
            if (j.contains("cokernel_dim"))
                d.cokernel_dim = parse_cardinal(j["cokernel_dim"], path + "/cokernel_dim");
            return d;
        }
        if (type == "block_right_shift" || type == "block_left_shift") {
            require_keys(j, path, {"type", "fiber_dim", "fiber_truncation", "block_truncation"});
            for (const char* k : {"fiber_dim", "fiber_truncation", "block_truncation"})
                if (!j.contains(k)) fail(path, std::string("missing \"") + k + "\"");
            const CardinalDim fiber = parse_cardinal(j["fiber_dim"], path + "/fiber_dim");
            const int ft = parse_int(j["fiber_truncation"], path + "/fiber_truncation");
            const int bt = parse_int(j["block_truncation"], path + "/block_truncation");
            if (type == "block_right_shift") return BlockRightShift{fiber, ft, bt};
            return BlockLeftShift{fiber, ft, bt};
        }
        if (type == "multiplication") {
            require_keys(j, path, {"type", "sample_points", "sample_weights"});
            if (!j.contains("sample_points")) fail(path, "missing \"sample_points\"");
            Multiplication m;
            m.sample_points = parse_complex_list(j["sample_points"], path + "/sample_points");
            if (j.contains("sample_weights")) {
                const Json& w = j["sample_weights"];
                if (!w.is_array()) fail(path + "/sample_weights", "expected an array");
                for (std::size_t i = 0; i < w.size(); ++i)
                    m.sample_weights.push_back(
                        parse_number(w[i], path + "/sample_weights/" + std::to_string(i)));
            } else {
                m.sample_weights.assign(m.sample_points.size(), 1.0);
            }
            return m;
        }
        if (type == "volterra") {
            require_keys(j, path, {"type", "grid_size"});
            if (!j.contains("grid_size")) fail(path, "missing \"grid_size\"");
            return Volterra{parse_int(j["grid_size"], path + "/grid_size")};
        }
        if (type == "zero") {
            require_keys(j, path, {"type", "space_dim", "truncation"});
            for (const char* k : {"space_dim", "truncation"})
                if (!j.contains(k)) fail(path, std::string("missing \"") + k + "\"");
            return ZeroOperator{parse_cardinal(j["space_dim"], path + "/space_dim"),
                                parse_int(j["truncation"], path + "/truncation")};
        }
        if (type == "direct_sum") {
            require_keys(j, path, {"type", "parts"});
            if (!j.contains("parts") || !j["parts"].is_array() || j["parts"].empty())
                fail(path, "direct_sum needs a nonempty \"parts\" array");
            DirectSum ds;
            for (std::size_t i = 0; i < j["parts"].size(); ++i)
                ds.parts.push_back(
                    parse_operator(j["parts"][i], path + "/parts/" + std::to_string(i)));
            return ds;
        }
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
    fail(path + "/type", "unknown operator type \"" + type + "\"");
}

StructuredOperator parse_operator(const Json& j, const std::string& path) {
    return parse_operator_node(j, path);
}

Contour parse_contour(const Json& j, const std::string& path) {
    require_keys(j, path, {"circles", "nodes", "branch_cut_angle"});
    if (!j.contains("circles")) fail(path, "missing \"circles\"");
    Contour c;
    const Json& circles = j["circles"];
    if (!circles.is_array() || circles.empty()) fail(path + "/circles", "expected circles");
    for (std::size_t i = 0; i < circles.size(); ++i) {
        const std::string cpath = path + "/circles/" + std::to_string(i);
        if (!circles[i].is_object()) fail(cpath, "expected an object");
        require_keys(circles[i], cpath, {"center", "radius"});
        for (const char* k : {"center", "radius"})
            if (!circles[i].contains(k)) fail(cpath, std::string("missing \"") + k + "\"");
        c.circles.push_back(Circle{parse_complex(circles[i]["center"], cpath + "/center"),
                                   parse_number(circles[i]["radius"], cpath + "/radius")});
    }
    if (j.contains("nodes")) c.nodes = parse_int(j["nodes"], path + "/nodes");
    if (j.contains("branch_cut_angle"))
        c.branch_cut_angle = parse_number(j["branch_cut_angle"], path + "/branch_cut_angle");
    return c;
}

SpecOptions parse_options(const Json& j, const std::string& path) {
    require_keys(j, path, {"nodes", "grid", "depth", "branch", "tol", "seed"});
    SpecOptions o;
    if (j.contains("nodes")) o.nodes = parse_int(j["nodes"], path + "/nodes");
    if (j.contains("grid")) o.grid = parse_int(j["grid"], path + "/grid");
    if (j.contains("depth")) o.depth = parse_int(j["depth"], path + "/depth");
    if (j.contains("branch")) {
        if (!j["branch"].is_array()) fail(path + "/branch", "expected an array of integers");
        for (std::size_t i = 0; i < j["branch"].size(); ++i)
            o.branch.push_back(parse_int(j["branch"][i], path + "/branch/" + std::to_string(i)));
    }
    if (j.contains("tol")) o.tol = parse_number(j["tol"], path + "/tol");
    if (j.contains("seed")) {
        const long long s = parse_int(j["seed"], path + "/seed");
        if (s < 0) fail(path + "/seed", "seed must be nonnegative");
        o.seed = static_cast<unsigned>(s);
    }
    return o;
}

Json serialize_complex(Complex z) { return Json::array({z.real(), z.imag()}); }

Json serialize_cardinal(CardinalDim c) {
    if (c.is_infinite()) return Json("infinite");
    return Json(c.finite_value());
}

Json serialize_node(const StructuredOperator& op) {
    struct Visitor {
        Json operator()(const Dense& d) const {
            Json rows = Json::array();
            for (Eigen::Index r = 0; r < d.matrix.dim(); ++r) {
                Json row = Json::array();
                for (Eigen::Index c = 0; c < d.matrix.dim(); ++c)
                    row.push_back(serialize_complex(d.matrix.mat()(r, c)));
                rows.push_back(std::move(row));
            }
            return Json{{"type", "dense"}, {"entries", std::move(rows)}};
        }
        Json operator()(const Diagonal& d) const {
            Json eigs = Json::array();
            for (Complex z : d.eigenvalues) eigs.push_back(serialize_complex(z));
            return Json{{"type", "diagonal"},
                        {"eigenvalues", std::move(eigs)},
                        {"kernel_dim", serialize_cardinal(d.kernel_dim)},
                        {"cokernel_dim", serialize_cardinal(d.cokernel_dim)}};
        }
        Json operator()(const BlockRightShift& s) const {
            return Json{{"type", "block_right_shift"},
                        {"fiber_dim", serialize_cardinal(s.fiber_dim)},
                        {"fiber_truncation", s.fiber_truncation},
                        {"block_truncation", s.block_truncation}};
        }
        Json operator()(const BlockLeftShift& s) const {
            return Json{{"type", "block_left_shift"},
                        {"fiber_dim", serialize_cardinal(s.fiber_dim)},
                        {"fiber_truncation", s.fiber_truncation},
                        {"block_truncation", s.block_truncation}};
        }
        Json operator()(const Multiplication& m) const {
            Json pts = Json::array();
            for (Complex z : m.sample_points) pts.push_back(serialize_complex(z));
            return Json{{"type", "multiplication"},
                        {"sample_points", std::move(pts)},
                        {"sample_weights", m.sample_weights}};
        }
        Json operator()(const Volterra& v) const {
            return Json{{"type", "volterra"}, {"grid_size", v.grid_size}};
        }
        Json operator()(const ZeroOperator& z) const {
            return Json{{"type", "zero"},
                        {"space_dim", serialize_cardinal(z.space_dim)},
                        {"truncation", z.truncation}};
        }
        Json operator()(const DirectSum& d) const {
            Json parts = Json::array();
            for (const auto& p : d.parts) parts.push_back(serialize_node(p));
            return Json{{"type", "direct_sum"}, {"parts", std::move(parts)}};
        }
    };
    return std::visit(Visitor{}, op.node());
}

} // namespace

OperatorSpec parse_operator_spec(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("spec: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("spec: top level must be an object");
    require_keys(j, "", {"operator", "contour", "options"});
    if (!j.contains("operator")) throw ParseError("spec: missing \"operator\"");

    std::optional<Contour> contour;
    if (j.contains("contour")) contour = parse_contour(j["contour"], "/contour");
    SpecOptions options;
    if (j.contains("options")) options = parse_options(j["options"], "/options");
    return OperatorSpec{parse_operator(j["operator"], "/operator"), std::move(contour),
                        std::move(options)};
}

OperatorSpec load_operator_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("spec: cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_operator_spec(buffer.str());
}

std::string serialize_operator_spec(const StructuredOperator& op) {
    Json root{{"operator", serialize_node(op)}};
    return root.dump(2) + "\n";
}

} // namespace c0embed
