#include "fracknot/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fracknot::io {

namespace {

using nlohmann::json;

double as_number(const json& j, const char* what) {
    if (!j.is_number()) throw std::invalid_argument(std::string("function json: ") + what +
                                                    " must be a number");
    return j.get<double>();
}

std::vector<double> as_number_array(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string("function json: ") + what +
                                                   " must be an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(as_number(e, what));
    return out;
}

// strict double parse, whole field must be consumed
double parse_double(const std::string& field, std::size_t line_no) {
    const char* begin = field.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw std::invalid_argument("signal csv: bad number on line " + std::to_string(line_no));
    return v;
}

std::string trim(const std::string& s) {
    const auto from = s.find_first_not_of(" \t\r");
    if (from == std::string::npos) return {};
    const auto to = s.find_last_not_of(" \t\r");
    return s.substr(from, to - from + 1);
}

void append_number(std::string& out, double v) { out += format_number(v); }

}  // namespace

std::string format_number(double v) {
    if (v == 0.0) return "0";  // normalize the sign of zero
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

PiecewiseFunction parse_function_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("function json: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("domain") || !doc.contains("knots") ||
        !doc.contains("segments"))
        throw std::invalid_argument("function json: need domain, knots and segments");

    const auto domain = as_number_array(doc["domain"], "domain");
    if (domain.size() != 2)
        throw std::invalid_argument("function json: domain must be [a, b]");
    const auto knots = as_number_array(doc["knots"], "knots");

    if (!doc["segments"].is_array())
        throw std::invalid_argument("function json: segments must be an array");
    std::vector<Polynomial> segments;
    for (const auto& seg : doc["segments"])
        segments.emplace_back(as_number_array(seg, "segment"));

    return PiecewiseFunction(domain[0], domain[1], knots, std::move(segments));
}

std::string function_to_json(const PiecewiseFunction& f) {
    std::string out = "{\"domain\":[";
    append_number(out, f.a());
    out += ",";
    append_number(out, f.b());
    out += "],\"knots\":[";
    for (std::size_t i = 0; i < f.knots().size(); ++i) {
        if (i) out += ",";
        append_number(out, f.knots()[i]);
    }
    out += "],\"segments\":[";
    for (std::size_t i = 0; i < f.segment_count(); ++i) {
        if (i) out += ",";
        out += "[";
        const auto& c = f.segment(i).coefficients();
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (j) out += ",";
            append_number(out, c[j]);
        }
        out += "]";
    }
    out += "]}";
    return out;
}

SampleSeries parse_signal_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::pair<double, double>> points;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;
        if (!saw_header) {
            if (line != "x,y")
                throw std::invalid_argument("signal csv: first line must be the header x,y");
            saw_header = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
            throw std::invalid_argument("signal csv: expected two fields on line " +
                                        std::to_string(line_no));
        points.emplace_back(parse_double(trim(line.substr(0, comma)), line_no),
                            parse_double(trim(line.substr(comma + 1)), line_no));
    }
    if (!saw_header) throw std::invalid_argument("signal csv: missing header");
    return SampleSeries(std::move(points));
}

std::string expression_to_json(const FracExpression& e) {
    std::string out = "{\"side\":\"";
    out += e.side() == Side::left ? "left" : "right";
    out += "\",\"alpha\":";
    append_number(out, e.alpha());
    out += ",\"regions\":[";
    for (std::size_t r = 0; r < e.regions().size(); ++r) {
        const auto& region = e.regions()[r];
        if (r) out += ",";
        out += "{\"from\":";
        append_number(out, region.from);
        out += ",\"to\":";
        append_number(out, region.to);
        out += ",\"terms\":[";
        for (std::size_t t = 0; t < region.terms.size(); ++t) {
            const auto& term = region.terms[t];
            if (t) out += ",";
            out += "{\"c\":";
            append_number(out, term.coefficient);
            out += ",\"center\":";
            append_number(out, term.center);
            out += ",\"exp\":";
            append_number(out, term.exponent);
            out += "}";
        }
        out += "]}";
    }
    out += "]}";
    return out;
}

std::string report_to_json(const TransitionReport& r) {
    std::string out = "{\"alpha\":";
    append_number(out, r.alpha);
    out += ",\"source\":";
    out += json(r.source).dump();  // source may need escaping
    out += ",\"engine\":\"";
    out += r.engine == IndicatorEngine::closed_form ? "closed-form" : "numeric";
    out += "\",\"findings\":[";
    for (std::size_t i = 0; i < r.findings.size(); ++i) {
        const auto& f = r.findings[i];
        if (i) out += ",";
        out += "{\"x\":";
        append_number(out, f.x);
        out += ",\"slope_jump\":";
        append_number(out, f.slope_jump);
        out += ",\"left\":";
        append_number(out, f.left_value);
        out += ",\"right\":";
        append_number(out, f.right_value);
        out += ",\"indicator\":";
        append_number(out, f.indicator);
        out += "}";
    }
    out += "]}";
    return out;
}

std::string grid_to_csv(const std::vector<std::pair<double, double>>& points) {
    std::string out = "x,value\n";
    for (const auto& [x, v] : points) {
        append_number(out, x);
        out += ",";
        append_number(out, v);
        out += "\n";
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    if (in.bad()) throw std::invalid_argument("cannot read file: " + path);
    return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write file: " + path);
        out << content;
        out.flush();
        if (!out.good()) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("cannot write file: " + path);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::runtime_error("cannot move temporary into place: " + path);
    }
}

}  // namespace fracknot::io
