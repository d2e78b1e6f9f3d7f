#include "bimono/json_io.hpp"

#include "bimono/error.hpp"

namespace bimono::io {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) fail(ErrorKind::invalid_input, std::string("missing field '") + name + "'");
    return j.at(name);
}

std::size_t size_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_unsigned()) fail(ErrorKind::invalid_input, std::string("field '") + name + "' must be a nonnegative integer");
    return v.get<std::size_t>();
}

void expect_kind(const Json& j, std::string_view kind) {
    if (kind_of(j) != kind) fail(ErrorKind::invalid_input, "expected a '" + std::string(kind) + "' document, got '" + kind_of(j) + "'");
}

std::vector<std::vector<Rational>> rational_rows(const Json& rows, std::size_t size, const char* what) {
    if (!rows.is_array() || rows.size() != size)
        fail(ErrorKind::invalid_input, std::string(what) + " must have " + std::to_string(size) + " rows");
    std::vector<std::vector<Rational>> out;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != size)
            fail(ErrorKind::invalid_input, std::string(what) + " rows must have " + std::to_string(size) + " entries");
        auto& r = out.emplace_back();
        for (const auto& x : row) r.push_back(rational_from_json(x));
    }
    return out;
}

template <class Grid>
Json grid_rows(const Grid& g) {
    Json rows = Json::array();
    for (std::size_t m = 0; m <= g.order(); ++m) {
        Json row = Json::array();
        for (std::size_t n = 0; n <= g.order(); ++n) row.push_back(to_json(g(m, n)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string key(std::size_t i, std::size_t j) { return std::to_string(i) + "," + std::to_string(j); }

Json block_json(const Block& b) {
    Json out = Json::array();
    for (int p : b) out.push_back(p);
    return out;
}

} // namespace

Json document(std::string_view kind) {
    Json j;
    j["schema"] = schema;
    j["kind"] = kind;
    return j;
}

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    fail(ErrorKind::invalid_input, "rationals are written as strings \"p/q\" or integers, got " + j.dump());
}

std::string kind_of(const Json& j) {
    const Json& k = field(j, "kind");
    if (!k.is_string()) fail(ErrorKind::invalid_input, "'kind' must be a string");
    if (j.contains("schema") && j.at("schema") != schema)
        fail(ErrorKind::invalid_input, "unsupported schema " + j.at("schema").dump());
    return k.get<std::string>();
}

Json to_json(const WordDistribution& d) {
    Json j = document("word");
    j["max_len"] = d.max_len();
    Json moments = Json::object();
    for (std::size_t n = 1; n <= d.max_len(); ++n)
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits)
            moments[word_from_bits(n, bits).str()] = to_json(d.at(n, bits));
    j["moments"] = std::move(moments);
    return j;
}

WordDistribution word_distribution_from_json(const Json& j) {
    expect_kind(j, "word");
    const std::size_t max_len = size_field(j, "max_len");
    if (max_len > max_word_len) fail(ErrorKind::resource_limit, "max_len above " + std::to_string(max_word_len));
    const Json& moments = field(j, "moments");
    WordDistribution d(max_len);
    for (std::size_t n = 1; n <= max_len; ++n)
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
            const std::string w = word_from_bits(n, bits).str();
            if (!moments.contains(w)) fail(ErrorKind::invalid_input, "moment for word '" + w + "' is missing");
            d.set(n, bits, rational_from_json(moments.at(w)));
        }
    return d;
}

Json to_json(const GridDistribution& g) {
    Json j = document("grid");
    j["order"] = g.order();
    j["M"] = grid_rows(g);
    return j;
}

GridDistribution grid_from_json(const Json& j) {
    expect_kind(j, "grid");
    const std::size_t order = size_field(j, "order");
    const auto rows = rational_rows(field(j, "M"), order + 1, "M");
    if (rows[0][0] != 1) fail(ErrorKind::invalid_input, "M[0][0] must be 1");
    GridDistribution g(order);
    for (std::size_t m = 0; m <= order; ++m)
        for (std::size_t n = 0; n <= order; ++n) g(m, n) = rows[m][n];
    return g;
}

Json to_json(const CumulantTable& k) {
    Json j = document("cumulants");
    j["max_len"] = k.max_len();
    Json values = Json::object();
    for (std::size_t n = 1; n <= k.max_len(); ++n)
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
            const ChiWord w = word_from_bits(n, bits);
            if (k.contains(w)) values[w.str()] = to_json(k.at(n, bits));
        }
    j["cumulants"] = std::move(values);
    return j;
}

CumulantTable cumulant_table_from_json(const Json& j) {
    expect_kind(j, "cumulants");
    CumulantTable k(size_field(j, "max_len"));
    const Json& values = field(j, "cumulants");
    if (!values.is_object()) fail(ErrorKind::invalid_input, "'cumulants' must be an object keyed by words");
    for (const auto& [word, value] : values.items()) {
        const ChiWord chi = ChiWord::parse(word);
        if (chi.empty() || chi.size() > k.max_len()) fail(ErrorKind::invalid_input, "cumulant word '" + word + "' out of range");
        k.set(chi, rational_from_json(value));
    }
    return k;
}

Json to_json(const CumulantGrid& k) {
    Json j = document("cumulant-grid");
    j["order"] = k.order();
    j["K"] = grid_rows(k);
    return j;
}

CumulantGrid cumulant_grid_from_json(const Json& j) {
    expect_kind(j, "cumulant-grid");
    const std::size_t order = size_field(j, "order");
    const auto rows = rational_rows(field(j, "K"), order + 1, "K");
    CumulantGrid k(order);
    for (std::size_t m = 0; m <= order; ++m)
        for (std::size_t n = 0; n <= order; ++n)
            if (m + n > 0) k(m, n) = rows[m][n];
    return k;
}

Json to_json(const AtomicPlanarMeasure& mu) {
    Json j = document("measure");
    Json atoms = Json::array();
    for (const auto& a : mu.atoms()) atoms.push_back({{"s", to_json(a.s)}, {"t", to_json(a.t)}, {"w", to_json(a.weight)}});
    j["atoms"] = std::move(atoms);
    return j;
}

AtomicPlanarMeasure measure_from_json(const Json& j) {
    expect_kind(j, "measure");
    const Json& atoms = field(j, "atoms");
    if (!atoms.is_array()) fail(ErrorKind::invalid_input, "'atoms' must be an array");
    std::vector<Atom> out;
    for (const auto& a : atoms)
        out.push_back({rational_from_json(field(a, "s")), rational_from_json(field(a, "t")), rational_from_json(field(a, "w"))});
    return AtomicPlanarMeasure(std::move(out));
}

Json to_json(const RationalMatrix& x) {
    Json j = document("matrix");
    Json rows = Json::array();
    for (const auto& row : x.rows()) {
        Json r = Json::array();
        for (const auto& q : row) r.push_back(to_json(q));
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

RationalMatrix matrix_from_json(const Json& j) {
    expect_kind(j, "matrix");
    const Json& rows = field(j, "rows");
    if (!rows.is_array()) fail(ErrorKind::invalid_input, "'rows' must be an array");
    return RationalMatrix::from_rows(rational_rows(rows, rows.size(), "rows"));
}

Json to_json(const Series1Q& s) {
    Json j = document("series1");
    j["order"] = s.order();
    Json c = Json::object();
    for (std::size_t i = 0; i <= s.order(); ++i)
        if (s[i] != 0) c[std::to_string(i)] = to_json(s[i]);
    j["coefficients"] = std::move(c);
    return j;
}

Json to_json(const Series2Q& s) {
    Json j = document("series2");
    j["order"] = s.order();
    Json c = Json::object();
    for (std::size_t i = 0; i <= s.order(); ++i)
        for (std::size_t k = 0; k <= s.order(); ++k)
            if (s(i, k) != 0) c[key(i, k)] = to_json(s(i, k));
    j["coefficients"] = std::move(c);
    return j;
}

Json to_json(const TimePolynomial& p) {
    Json out = Json::array();
    for (const auto& c : p.coefficients()) out.push_back(to_json(c));
    return out;
}

Json to_json(const Series2T& s) {
    Json j = document("series2-t");
    j["order"] = s.order();
    Json c = Json::object();
    for (std::size_t i = 0; i <= s.order(); ++i)
        for (std::size_t k = 0; k <= s.order(); ++k)
            if (!s(i, k).is_zero()) c[key(i, k)] = to_json(s(i, k));
    j["coefficients"] = std::move(c);
    return j;
}

Json to_json(const SetPartition& pi) {
    Json blocks = Json::array();
    for (const auto& b : pi.blocks) blocks.push_back(block_json(b));
    return Json{{"blocks", std::move(blocks)}};
}

Json to_json(const OrderedPartition& p) {
    Json j = to_json(p.partition);
    j["rank"] = p.rank;
    return j;
}

Json to_json(const PsdVerdict& v) {
    Json j;
    j["psd"] = v.is_psd;
    if (v.witness) {
        Json w = Json::array();
        for (const auto& q : *v.witness) w.push_back(to_json(q));
        j["witness"] = std::move(w);
        j["witness_value"] = to_json(*v.witness_value);
    }
    if (v.diagonal) {
        Json d = Json::array();
        for (const auto& q : *v.diagonal) d.push_back(to_json(q));
        j["diagonal"] = std::move(d);
        j["transform"] = to_json(*v.transform)["rows"];
    }
    return j;
}

std::vector<PointedSpace> spaces_from_json(const Json& j) {
    expect_kind(j, "spaces");
    const Json& spaces = field(j, "spaces");
    if (!spaces.is_array() || spaces.empty()) fail(ErrorKind::invalid_input, "'spaces' must be a nonempty array");
    std::vector<PointedSpace> out;
    for (const auto& s : spaces) {
        const std::size_t d = size_field(s, "dimension");
        if (d == 0) fail(ErrorKind::invalid_input, "pointed spaces need dimension >= 1");
        out.push_back({d});
    }
    return out;
}

std::vector<Type2Letter> type2_word_from_json(const Json& j) {
    expect_kind(j, "type2-word");
    const Json& letters = field(j, "letters");
    if (!letters.is_array()) fail(ErrorKind::invalid_input, "'letters' must be an array");
    std::vector<Type2Letter> out;
    for (const auto& l : letters) {
        const Json& family = field(l, "family");
        if (!family.is_number_integer()) fail(ErrorKind::invalid_input, "'family' must be an integer");
        const Json& side = field(l, "side");
        if (side != "L" && side != "R") fail(ErrorKind::invalid_input, "'side' must be \"L\" or \"R\"");
        const Json& rows = field(l, "matrix");
        if (!rows.is_array()) fail(ErrorKind::invalid_input, "'matrix' must be an array of rows");
        out.push_back({side == "L" ? Side::left : Side::right,
                       LocalOperator{family.get<int>(), rational_rows(rows, rows.size(), "matrix")}});
    }
    return out;
}

} // namespace bimono::io
