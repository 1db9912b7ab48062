#include "logmod/io.hpp"

#include <set>

#include "logmod/error.hpp"

namespace logmod::io {

namespace {

const Int kExactLimit = Int(1) << 53;

[[noreturn]] void schema_error(const std::string& path, const std::string& msg)
{
  fail(ErrorCode::ParseError, (path.empty() ? std::string("/") : path) + ": " + msg);
}

// Object reader that remembers which keys were consumed.
class Reader {
public:
  Reader(const Json& j, std::string path) : j_(j), path_(std::move(path))
  {
    if (!j_.is_object())
      schema_error(path_, "expected an object");
  }

  const std::string& path() const { return path_; }
  std::string at(const std::string& key) const { return path_ + "/" + key; }

  const Json* optional(const std::string& key)
  {
    used_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  const Json& required(const std::string& key)
  {
    const Json* v = optional(key);
    if (!v)
      schema_error(path_, "missing field \"" + key + "\"");
    return *v;
  }

  void finish() const
  {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!used_.count(it.key()))
        schema_error(path_, "unknown field \"" + it.key() + "\"");
  }

private:
  const Json& j_;
  std::string path_;
  std::set<std::string> used_;
};

Int read_int(const Json& j, const std::string& path)
{
  if (j.is_number_integer()) {
    if (j.is_number_unsigned())
      return Int(j.get<std::uint64_t>());
    return Int(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      schema_error(path, "expected a decimal integer string, got \"" + s + "\"");
    return Int(s);
  }
  if (j.is_number_float())
    schema_error(path, "expected an integer (write large integers as decimal strings)");
  schema_error(path, "expected an integer");
}

std::size_t read_size(const Json& j, const std::string& path)
{
  Int x = read_int(j, path);
  if (x < 0 || x > 1'000'000)
    schema_error(path, "expected a small natural number");
  return static_cast<std::size_t>(x);
}

Vec read_vec(const Json& j, const std::string& path)
{
  if (!j.is_array())
    schema_error(path, "expected an array of integers");
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(read_int(j[i], path + "/" + std::to_string(i)));
  return v;
}

Matrix read_matrix(const Json& j, const std::string& path)
{
  if (!j.is_array())
    schema_error(path, "expected an array of integer arrays");
  Matrix m;
  for (std::size_t i = 0; i < j.size(); ++i)
    m.push_back(read_vec(j[i], path + "/" + std::to_string(i)));
  return m;
}

std::string read_string(const Json& j, const std::string& path)
{
  if (!j.is_string())
    schema_error(path, "expected a string");
  return j.get<std::string>();
}

MonoidDoc read_monoid_fields(Reader& r)
{
  MonoidDoc m;
  m.ambient_rank = read_size(r.required("ambient_rank"), r.at("ambient_rank"));
  m.generators = read_matrix(r.required("generators"), r.at("generators"));
  return m;
}

// Nested monoid: {"ambient_rank", "generators"} with an optional "type":"monoid".
MonoidDoc read_monoid(const Json& j, const std::string& path)
{
  Reader r(j, path);
  if (const Json* t = r.optional("type"))
    if (read_string(*t, r.at("type")) != "monoid")
      schema_error(r.at("type"), "nested monoid must have type \"monoid\"");
  MonoidDoc m = read_monoid_fields(r);
  r.finish();
  return m;
}

ConeSpec read_cone_spec(const Json& j, const std::string& path)
{
  Reader r(j, path);
  ConeSpec c;
  if (const Json* x = r.optional("rays"))
    c.rays = read_matrix(*x, r.at("rays"));
  if (const Json* x = r.optional("inequalities"))
    c.inequalities = read_matrix(*x, r.at("inequalities"));
  if (const Json* x = r.optional("equations"))
    c.equations = read_matrix(*x, r.at("equations"));
  r.finish();
  if (c.rays && (c.inequalities || c.equations))
    schema_error(path, "give either rays or inequalities/equations, not both");
  if (!c.rays && !c.inequalities && !c.equations)
    schema_error(path, "a cone needs rays or inequalities");
  return c;
}

template <class T, class F>
std::vector<T> read_list(const Json& j, const std::string& path, F&& f)
{
  if (!j.is_array())
    schema_error(path, "expected an array");
  std::vector<T> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(f(j[i], path + "/" + std::to_string(i)));
  return out;
}

Document read_document(const Json& j)
{
  Reader r(j, "");
  std::string type = read_string(r.required("type"), "/type");
  Document d;
  if (type == "monoid") {
    d = read_monoid_fields(r);
  } else if (type == "cone") {
    ConeDoc c;
    c.ambient_rank = read_size(r.required("ambient_rank"), "/ambient_rank");
    c.rays = read_matrix(r.required("rays"), "/rays");
    if (const Json* x = r.optional("lattice"))
      c.lattice = read_matrix(*x, "/lattice");
    d = c;
  } else if (type == "localization") {
    d = LocalizationDoc{read_monoid(r.required("monoid"), "/monoid"), read_matrix(r.required("face"), "/face")};
  } else if (type == "intersection") {
    d = IntersectionDoc{read_monoid(r.required("monoid"), "/monoid"),
                        read_matrix(r.required("subgroup"), "/subgroup")};
  } else if (type == "hom") {
    d = HomDoc{read_monoid(r.required("source"), "/source"), read_monoid(r.required("target"), "/target"),
               read_matrix(r.required("matrix"), "/matrix")};
  } else if (type == "ideal") {
    d = IdealDoc{read_monoid(r.required("base"), "/base"), read_matrix(r.required("generators"), "/generators")};
  } else if (type == "extension") {
    d = ExtensionDoc{read_monoid(r.required("q"), "/q"), read_monoid(r.required("p"), "/p")};
  } else if (type == "lift") {
    d = LiftDoc{read_monoid(r.required("base"), "/base"), read_matrix(r.required("generators"), "/generators"),
                read_vec(r.required("valuation"), "/valuation")};
  } else if (type == "valuative_family") {
    d = FamilyDoc{read_monoid(r.required("monoid"), "/monoid"),
                  read_matrix(r.required("functionals"), "/functionals")};
  } else if (type == "cover") {
    CoverDoc c;
    c.ambient_rank = read_size(r.required("ambient_rank"), "/ambient_rank");
    c.sigma_rays = read_matrix(r.required("sigma_rays"), "/sigma_rays");
    c.subcones = read_list<ConeSpec>(r.required("subcones"), "/subcones", read_cone_spec);
    d = c;
  } else if (type == "tower") {
    TowerDoc t;
    t.base = read_monoid(r.required("base"), "/base");
    t.stages = read_list<TowerStageDoc>(r.required("stages"), "/stages", [](const Json& s, const std::string& p) {
      Reader sr(s, p);
      TowerStageDoc st;
      st.ideal = read_matrix(sr.required("ideal"), sr.at("ideal"));
      if (const Json* c = sr.optional("chart"))
        st.chart = read_size(*c, sr.at("chart"));
      sr.finish();
      return st;
    });
    d = t;
  } else if (type == "fan") {
    FanDoc f;
    f.ambient_rank = read_size(r.required("ambient_rank"), "/ambient_rank");
    f.support = read_cone_spec(r.required("support"), "/support");
    f.cones = read_list<ConeSpec>(r.required("cones"), "/cones", read_cone_spec);
    d = f;
  } else if (type == "stratification") {
    StratificationDoc s;
    s.strata = read_list<StratumDoc>(r.required("strata"), "/strata", [](const Json& x, const std::string& p) {
      Reader sr(x, p);
      StratumDoc st;
      st.name = read_string(sr.required("name"), sr.at("name"));
      st.closure_dim = read_size(sr.required("closure_dim"), sr.at("closure_dim"));
      st.char_monoid = read_monoid(sr.required("char_monoid"), sr.at("char_monoid"));
      sr.finish();
      return st;
    });
    d = s;
  } else {
    schema_error("/type", "unknown document type \"" + type + "\"");
  }
  r.finish();
  return d;
}

Json cone_spec_to_json(const ConeSpec& c)
{
  Json j = Json::object();
  if (c.rays)
    j["rays"] = matrix_to_json(*c.rays);
  if (c.inequalities)
    j["inequalities"] = matrix_to_json(*c.inequalities);
  if (c.equations)
    j["equations"] = matrix_to_json(*c.equations);
  return j;
}

// Key order in the output follows insertion order.
using OJson = nlohmann::ordered_json;

} // namespace

Json int_to_json(const Int& x)
{
  if (x > kExactLimit || x < -kExactLimit)
    return Json(x.str());
  return Json(static_cast<std::int64_t>(x));
}

Json vec_to_json(const Vec& v)
{
  Json j = Json::array();
  for (const auto& x : v)
    j.push_back(int_to_json(x));
  return j;
}

Json matrix_to_json(const Matrix& m)
{
  Json j = Json::array();
  for (const auto& v : m)
    j.push_back(vec_to_json(v));
  return j;
}

Json monoid_to_json(const MonoidDoc& m)
{
  return Json{{"ambient_rank", m.ambient_rank}, {"generators", matrix_to_json(m.generators)}};
}

std::string type_name(const Document& d)
{
  static const char* names[] = {"monoid", "cone",      "localization",     "intersection", "hom",
                                "ideal",  "extension", "lift",             "valuative_family",
                                "cover",  "tower",     "fan",              "stratification"};
  return names[d.index()];
}

Document parse_document(std::string_view text)
{
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    // nlohmann's text reads "[json.exception...] parse error at line L, column C: <reason>".
    std::string what = e.what();
    auto pos = what.find(": ", what.find("column"));
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                                    (pos == std::string::npos ? what : what.substr(pos + 2)));
  }
  return read_document(j);
}

Json to_json(const Document& d)
{
  Json j = std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, MonoidDoc>) {
          return monoid_to_json(x);
        } else if constexpr (std::is_same_v<T, ConeDoc>) {
          Json o{{"ambient_rank", x.ambient_rank}, {"rays", matrix_to_json(x.rays)}};
          if (x.lattice)
            o["lattice"] = matrix_to_json(*x.lattice);
          return o;
        } else if constexpr (std::is_same_v<T, LocalizationDoc>) {
          return Json{{"monoid", monoid_to_json(x.monoid)}, {"face", matrix_to_json(x.face)}};
        } else if constexpr (std::is_same_v<T, IntersectionDoc>) {
          return Json{{"monoid", monoid_to_json(x.monoid)}, {"subgroup", matrix_to_json(x.subgroup)}};
        } else if constexpr (std::is_same_v<T, HomDoc>) {
          return Json{{"source", monoid_to_json(x.source)},
                      {"target", monoid_to_json(x.target)},
                      {"matrix", matrix_to_json(x.matrix)}};
        } else if constexpr (std::is_same_v<T, IdealDoc>) {
          return Json{{"base", monoid_to_json(x.base)}, {"generators", matrix_to_json(x.generators)}};
        } else if constexpr (std::is_same_v<T, ExtensionDoc>) {
          return Json{{"q", monoid_to_json(x.q)}, {"p", monoid_to_json(x.p)}};
        } else if constexpr (std::is_same_v<T, LiftDoc>) {
          return Json{{"base", monoid_to_json(x.base)},
                      {"generators", matrix_to_json(x.generators)},
                      {"valuation", vec_to_json(x.valuation)}};
        } else if constexpr (std::is_same_v<T, FamilyDoc>) {
          return Json{{"monoid", monoid_to_json(x.monoid)}, {"functionals", matrix_to_json(x.functionals)}};
        } else if constexpr (std::is_same_v<T, CoverDoc>) {
          Json subs = Json::array();
          for (const auto& c : x.subcones)
            subs.push_back(cone_spec_to_json(c));
          return Json{{"ambient_rank", x.ambient_rank}, {"sigma_rays", matrix_to_json(x.sigma_rays)},
                      {"subcones", subs}};
        } else if constexpr (std::is_same_v<T, TowerDoc>) {
          Json stages = Json::array();
          for (const auto& s : x.stages) {
            Json o{{"ideal", matrix_to_json(s.ideal)}};
            if (s.chart)
              o["chart"] = *s.chart;
            stages.push_back(o);
          }
          return Json{{"base", monoid_to_json(x.base)}, {"stages", stages}};
        } else if constexpr (std::is_same_v<T, FanDoc>) {
          Json cones = Json::array();
          for (const auto& c : x.cones)
            cones.push_back(cone_spec_to_json(c));
          return Json{{"ambient_rank", x.ambient_rank}, {"support", cone_spec_to_json(x.support)}, {"cones", cones}};
        } else {
          Json strata = Json::array();
          for (const auto& s : x.strata)
            strata.push_back(Json{{"name", s.name},
                                  {"closure_dim", s.closure_dim},
                                  {"char_monoid", monoid_to_json(s.char_monoid)}});
          return Json{{"strata", strata}};
        }
      },
      d);
  j["type"] = type_name(d);
  return j;
}

std::string serialize(const Document& d)
{
  // "type" first, remaining keys alphabetically, for stable golden files.
  Json j = to_json(d);
  OJson o;
  o["type"] = j["type"];
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "type")
      o[it.key()] = OJson::parse(it.value().dump());
  return o.dump();
}

} // namespace logmod::io
