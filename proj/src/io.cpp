#include "bgc/io.hpp"

#include "bgc/errors.hpp"

namespace bgc {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

int require_int(const json& j, const char* field, const std::string& where) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw ParseError("missing or non-integer '" + std::string(field) + "' in " + where);
    return j[field].get<int>();
}

}  // namespace

BigradedComplex parse_complex_document(const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("top level must be an object");
    if (doc.contains("schema_version") && doc["schema_version"] != "1")
        throw ParseError("unsupported schema_version");

    ComplexData data;
    if (doc.contains("dims")) {
        if (!doc["dims"].is_array()) throw ParseError("'dims' must be an array");
        for (std::size_t i = 0; i < doc["dims"].size(); ++i) {
            const json& e = doc["dims"][i];
            std::string where = "dims[" + std::to_string(i) + "]";
            int p = require_int(e, "p", where);
            int q = require_int(e, "q", where);
            int d = require_int(e, "dim", where);
            if (p < 0 || q < 0) throw ParseError(where + ": indices must be nonnegative");
            if (d < 0) throw ParseError(where + ": dim must be nonnegative");
            if (data.dims.count({p, q})) throw ParseError(where + ": duplicate bidegree");
            if (d > 0) data.dims[{p, q}] = d;
        }
    }
    auto dim_of = [&data](Bidegree b) {
        auto it = data.dims.find(b);
        return it == data.dims.end() ? 0 : it->second;
    };
    if (doc.contains("operators")) {
        if (!doc["operators"].is_array()) throw ParseError("'operators' must be an array");
        for (std::size_t i = 0; i < doc["operators"].size(); ++i) {
            const json& e = doc["operators"][i];
            std::string where = "operators[" + std::to_string(i) + "]";
            if (!e.contains("kind") || !e["kind"].is_string())
                throw ParseError(where + ": missing 'kind'");
            std::string kind_name = e["kind"].get<std::string>();
            OpKind kind;
            if (kind_name == "d01")
                kind = OpKind::d01;
            else if (kind_name == "d10")
                kind = OpKind::d10;
            else if (kind_name == "d2m1")
                kind = OpKind::d2m1;
            else
                throw ParseError(where + ": unknown kind '" + kind_name + "'");
            int p = require_int(e, "p", where);
            int q = require_int(e, "q", where);
            if (p < 0 || q < 0) throw ParseError(where + ": indices must be nonnegative");
            Bidegree src{p, q};
            Bidegree dst = shifted(src, kind);
            int rows = dst.q < 0 ? 0 : dim_of(dst);
            int cols = dim_of(src);
            QMatrix m(rows, cols);
            if (e.contains("entries")) {
                if (!e["entries"].is_array()) throw ParseError(where + ": 'entries' not an array");
                for (std::size_t t = 0; t < e["entries"].size(); ++t) {
                    const json& ent = e["entries"][t];
                    std::string ewhere = where + ".entries[" + std::to_string(t) + "]";
                    int row = require_int(ent, "row", ewhere);
                    int col = require_int(ent, "col", ewhere);
                    if (row < 0 || row >= rows || col < 0 || col >= cols)
                        throw ParseError(ewhere + ": entry out of range for a " +
                                         std::to_string(rows) + "x" + std::to_string(cols) +
                                         " operator");
                    if (!ent.contains("value") || !ent["value"].is_string())
                        throw ParseError(ewhere + ": 'value' must be a rational string");
                    m.set(row, col, parse_rational(ent["value"].get<std::string>()));
                }
            }
            auto& table = kind == OpKind::d01 ? data.d01
                          : kind == OpKind::d10 ? data.d10
                                                : data.d2m1;
            if (table.count(src)) throw ParseError(where + ": duplicate operator block");
            if (!m.is_zero()) table[src] = std::move(m);
        }
    }
    try {
        return BigradedComplex::create(std::move(data));
    } catch (const MalformedComplex& e) {
        throw ParseError(e.what());
    }
}

BigradedComplex parse_complex(const std::string& text) {
    BigradedComplex c = parse_complex_document(text);
    if (!c.is_valid()) throw ValidationError(c.validation().to_string());
    return c;
}

nlohmann::json complex_to_json(const BigradedComplex& c, const nlohmann::json& metadata) {
    json doc;
    doc["schema_version"] = "1";
    doc["dims"] = json::array();
    for (const auto& [b, d] : c.dims())
        doc["dims"].push_back({{"p", b.p}, {"q", b.q}, {"dim", d}});
    doc["operators"] = json::array();
    auto emit_ops = [&doc, &c](OpKind kind) {
        for (const auto& [b, d] : c.dims()) {
            (void)d;
            QMatrix m = c.op(kind, b.p, b.q);
            if (m.is_zero()) continue;
            json entries = json::array();
            for (int r = 0; r < m.rows(); ++r)
                for (const auto& [col, v] : m.row(r))
                    entries.push_back(
                        {{"row", r}, {"col", col}, {"value", rational_to_string(v)}});
            doc["operators"].push_back(
                {{"kind", op_name(kind)}, {"p", b.p}, {"q", b.q}, {"entries", entries}});
        }
    };
    emit_ops(OpKind::d01);
    emit_ops(OpKind::d10);
    emit_ops(OpKind::d2m1);
    if (!metadata.empty()) doc["metadata"] = metadata;
    return doc;
}

std::string emit_complex(const BigradedComplex& c, const nlohmann::json& metadata) {
    return complex_to_json(c, metadata).dump(2);
}

GradedVector parse_cocycle_document(const BigradedComplex& c, const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("degree"))
        throw ParseError("cocycle document needs a 'degree'");
    int k = require_int(doc, "degree", "cocycle");
    GradedVector v{k, {}};
    if (doc.contains("components")) {
        if (!doc["components"].is_array()) throw ParseError("'components' must be an array");
        for (std::size_t i = 0; i < doc["components"].size(); ++i) {
            const json& e = doc["components"][i];
            std::string where = "components[" + std::to_string(i) + "]";
            int p = require_int(e, "p", where);
            int q = require_int(e, "q", where);
            if (p + q != k) throw ParseError(where + ": p+q must equal the degree");
            if (!e.contains("values") || !e["values"].is_array())
                throw ParseError(where + ": missing 'values'");
            if (static_cast<int>(e["values"].size()) != c.dim(p, q))
                throw ParseError(where + ": expected " + std::to_string(c.dim(p, q)) +
                                 " values");
            QVector block = zero_vector(e["values"].size());
            for (std::size_t t = 0; t < e["values"].size(); ++t) {
                if (!e["values"][t].is_string())
                    throw ParseError(where + ": values must be rational strings");
                block[t] = parse_rational(e["values"][t].get<std::string>());
            }
            if (!is_zero(block)) v.components[{p, q}] = std::move(block);
        }
    }
    return v;
}

nlohmann::json graded_vector_to_json(const GradedVector& v) {
    json doc;
    doc["degree"] = v.degree;
    doc["components"] = json::array();
    for (const auto& [b, block] : v.components) {
        json values = json::array();
        for (const auto& x : block) values.push_back(rational_to_string(x));
        doc["components"].push_back({{"p", b.p}, {"q", b.q}, {"values", values}});
    }
    return doc;
}

}  // namespace bgc
