#include "arce/json_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arce/errors.hpp"

namespace arce {

namespace {

using Json = nlohmann::ordered_json;

// Shortest decimal form that round-trips the exact double.
std::string format_double(double v) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec; // 32 chars always suffice for a double
    return std::string(buf.data(), end);
}

// JSON has no infinity literal, so non-finite values travel as strings.
Json json_number(double v) {
    if (std::isnan(v)) return Json("nan");
    if (std::isinf(v)) return Json(v > 0 ? "inf" : "-inf");
    return Json(v);
}

double number_from(const Json& j, const char* where) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    }
    throw ParseError(std::string(where) + ": expected a number");
}

Json parse_document(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::size_t size_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_unsigned())
        throw ParseError(std::string("missing or non-integral \"") + key + "\" field");
    return j.at(key).get<std::size_t>();
}

Json matrix_json(const JointDistribution& p) {
    Json rows = Json::array();
    for (std::size_t x = 0; x < p.nx(); ++x) {
        Json row = Json::array();
        for (std::size_t y = 0; y < p.ny(); ++y) row.push_back(json_number(p(x, y)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json joint_json(const JointDistribution& p) {
    Json j;
    j["nx"] = p.nx();
    j["ny"] = p.ny();
    j["matrix"] = matrix_json(p);
    return j;
}

JointDistribution joint_from_object(const Json& j) {
    const std::size_t nx = size_field(j, "nx");
    const std::size_t ny = size_field(j, "ny");
    if (!j.contains("matrix") || !j.at("matrix").is_array())
        throw ParseError("missing or non-array \"matrix\" field");
    const Json& rows = j.at("matrix");
    if (rows.size() != nx) throw ParseError("\"matrix\" row count disagrees with \"nx\"");
    std::vector<double> cells;
    cells.reserve(nx * ny);
    for (const Json& row : rows) {
        if (!row.is_array() || row.size() != ny)
            throw ParseError("\"matrix\" row length disagrees with \"ny\"");
        for (const Json& cell : row) cells.push_back(number_from(cell, "matrix cell"));
    }
    return JointDistribution(nx, ny, std::move(cells));
}

// Flat [re, im] pair.
Json complex_json(const Complex& z) {
    Json pair = Json::array();
    pair.push_back(json_number(z.real()));
    pair.push_back(json_number(z.imag()));
    return pair;
}

Complex complex_from(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("matrix entry must be an [re, im] pair");
    return Complex(number_from(j.at(0), "re"), number_from(j.at(1), "im"));
}

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    std::size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, e - b + 1);
}

double parse_cell(const std::string& token) {
    const std::string t = trimmed(token);
    double value = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError("CSV cell is not a number: \"" + token + "\"");
    return value;
}

} // namespace

// ---------------------------------------------------------------------------
// joint distributions
// ---------------------------------------------------------------------------

std::string joint_to_json(const JointDistribution& p) { return joint_json(p).dump(2) + "\n"; }

JointDistribution joint_from_json(const std::string& text) {
    const Json j = parse_document(text);
    if (!j.is_object()) throw ParseError("top-level JSON value must be an object");
    return joint_from_object(j);
}

std::string joint_to_csv(const JointDistribution& p) {
    std::string out;
    for (std::size_t x = 0; x < p.nx(); ++x) {
        for (std::size_t y = 0; y < p.ny(); ++y) {
            if (y > 0) out += ',';
            out += format_double(p(x, y));
        }
        out += '\n';
    }
    return out;
}

JointDistribution joint_from_csv(const std::string& text) {
    std::vector<double> cells;
    std::size_t nx = 0;
    std::size_t ny = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        const std::string line =
            trimmed(nl == std::string::npos ? text.substr(start) : text.substr(start, nl - start));
        start = (nl == std::string::npos) ? text.size() + 1 : nl + 1;
        if (line.empty()) continue;

        std::size_t row_len = 0;
        std::size_t cell_start = 0;
        while (cell_start <= line.size()) {
            const std::size_t comma = line.find(',', cell_start);
            const std::string token = (comma == std::string::npos)
                                          ? line.substr(cell_start)
                                          : line.substr(cell_start, comma - cell_start);
            cells.push_back(parse_cell(token));
            ++row_len;
            cell_start = (comma == std::string::npos) ? line.size() + 1 : comma + 1;
        }
        if (nx == 0) {
            ny = row_len;
        } else if (row_len != ny) {
            throw ParseError("CSV rows have unequal lengths");
        }
        ++nx;
    }
    if (nx == 0) throw ParseError("CSV document holds no rows");
    return JointDistribution(nx, ny, std::move(cells));
}

// ---------------------------------------------------------------------------
// classical-quantum states
// ---------------------------------------------------------------------------

std::string cq_to_json(const CQState& state) {
    Json j;
    j["d_a"] = state.d_a();
    Json weights = Json::array();
    for (std::size_t y = 0; y < state.ny(); ++y) weights.push_back(json_number(state.weights()[y]));
    j["weights"] = std::move(weights);
    Json blocks = Json::array();
    for (const DensityMatrix& block : state.blocks()) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < block.dim(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < block.dim(); ++c)
                row.push_back(complex_json(block.matrix()(r, c)));
            rows.push_back(std::move(row));
        }
        blocks.push_back(std::move(rows));
    }
    j["blocks"] = std::move(blocks);
    return j.dump(2) + "\n";
}

CQState cq_from_json(const std::string& text) {
    const Json j = parse_document(text);
    if (!j.is_object()) throw ParseError("top-level JSON value must be an object");
    const std::size_t d = size_field(j, "d_a");
    if (!j.contains("weights") || !j.at("weights").is_array())
        throw ParseError("missing or non-array \"weights\" field");
    if (!j.contains("blocks") || !j.at("blocks").is_array())
        throw ParseError("missing or non-array \"blocks\" field");

    std::vector<double> weights;
    for (const Json& w : j.at("weights")) weights.push_back(number_from(w, "weight"));

    const Json& blocks_json = j.at("blocks");
    if (blocks_json.size() != weights.size())
        throw ParseError("\"blocks\" count disagrees with \"weights\" length");

    std::vector<DensityMatrix> blocks;
    blocks.reserve(blocks_json.size());
    for (const Json& rows : blocks_json) {
        if (!rows.is_array() || rows.size() != d)
            throw ParseError("each block must hold d_a rows");
        std::vector<Complex> entries;
        entries.reserve(d * d);
        for (const Json& row : rows) {
            if (!row.is_array() || row.size() != d)
                throw ParseError("each block row must hold d_a entries");
            for (const Json& cell : row) entries.push_back(complex_from(cell));
        }
        blocks.emplace_back(CMatrix(d, std::move(entries)));
    }
    return CQState(ProbVector(std::move(weights)), std::move(blocks));
}

// ---------------------------------------------------------------------------
// result objects
// ---------------------------------------------------------------------------

std::string certificate_to_json(const BoundCertificate& cert) {
    Json j;
    j["alpha"] = json_number(cert.alpha);
    j["eps_budget"] = json_number(cert.eps_budget);
    j["dimension"] = cert.dimension;
    j["tv_actual"] = json_number(cert.tv_actual);
    j["lhs"] = json_number(cert.lhs);
    j["rhs"] = json_number(cert.rhs);
    j["slack"] = json_number(cert.slack);
    j["holds"] = cert.holds;
    return j.dump(2) + "\n";
}

std::string trace_to_json(const PipelineTrace& trace) {
    Json j;
    j["alpha"] = json_number(trace.alpha);
    j["t"] = json_number(trace.t);
    j["t_tilde"] = json_number(trace.t_tilde);
    j["final_bound"] = json_number(trace.final_bound);

    Json steps = Json::array();
    for (const StepSnapshot& step : trace.steps) {
        Json s;
        s["label"] = std::string(1, step.label);
        s["delta_h"] = json_number(step.delta_h);
        s["tv"] = json_number(step.tv);
        s["p"] = matrix_json(step.p);
        s["q"] = matrix_json(step.q);
        Json certs;
        for (const NamedCheck& check : step.certificates) certs[check.name] = check.passed;
        s["certificates"] = std::move(certs);
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);

    Json kept = Json::array();
    for (const std::vector<double>& row : trace.r_matrix) {
        Json r = Json::array();
        for (double v : row) r.push_back(json_number(v));
        kept.push_back(std::move(r));
    }
    j["r_matrix"] = std::move(kept);

    Json scalars;
    for (const auto& [name, value] : trace.scalars) scalars[name] = json_number(value);
    j["scalars"] = std::move(scalars);
    return j.dump(2) + "\n";
}

std::string search_result_to_json(const SearchResult& result) {
    Json j;
    j["best_ratio"] = json_number(result.best_ratio);
    j["iterations"] = result.iterations;
    j["evaluations"] = result.evaluations;
    j["seed"] = result.seed;
    j["best_p"] = joint_json(result.best_p);
    j["best_q"] = joint_json(result.best_q);
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// input sniffing
// ---------------------------------------------------------------------------

InputKind sniff_input(const std::string& text) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        const Json j = parse_document(text); // malformed JSON reports as JSON
        if (j.contains("blocks")) return InputKind::CQ;
        if (j.contains("matrix")) return InputKind::Joint;
        throw ParseError("JSON object carries neither \"matrix\" nor \"blocks\"");
    }
    joint_from_csv(text); // throws ParseError when the fallback fails too
    return InputKind::Joint;
}

} // namespace arce
