#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace pertcoul::cli {

namespace {

void write(const Json& j, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    const std::string close(static_cast<std::size_t>(indent), ' ');
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ",\n";
            first = false;
            out += pad + Json(it.key()).dump() + ": ";
            write(it.value(), out, indent + 2);
        }
        out += "\n" + close + "}";
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        bool scalars = true;
        for (const auto& v : j) scalars = scalars && !v.is_structured();
        if (scalars) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ", ";
                write(j[i], out, indent);
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out += ",\n";
            out += pad;
            write(j[i], out, indent + 2);
        }
        out += "\n" + close + "]";
        return;
    }
    case Json::value_t::number_float: {
        const double v = j.get<double>();
        out += std::isfinite(v) ? format_double(v) : "null";
        return;
    }
    default:
        out += j.dump();
    }
}

std::string scalar_text(const Json& v) {
    if (v.is_number_float()) return format_double(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    if (v.is_structured()) {
        std::string s = dump(v);
        s.pop_back();
        std::string flat;
        for (char ch : s) {
            if (ch == '\n') continue;
            if (ch == ' ' && !flat.empty() && flat.back() == ' ') continue;
            flat += ch;
        }
        return flat;
    }
    return v.dump();
}

void flatten(const Json& j, const std::string& path, std::ostringstream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
        }
    } else if (j.is_array() && !j.empty() && j.front().is_object()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
    } else {
        os << path << "  " << scalar_text(j) << "\n";
    }
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string dump(const Json& doc) {
    std::string out;
    write(doc, out, 0);
    out += "\n";
    return out;
}

std::string render_table(const Json& doc) {
    std::ostringstream os;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (it.key() == "checks") continue;
        flatten(it.value(), it.key(), os);
    }
    if (doc.contains("checks") && !doc["checks"].empty()) {
        os << "\n";
        char line[512];
        std::snprintf(line, sizeof line, "%-32s %-6s %-8s %-24s %s\n", "check", "kind", "status",
                      "tol", "value");
        os << line;
        for (const auto& c : doc["checks"]) {
            const char* status = c["pass"].is_null() ? "info" : c["pass"].get<bool>() ? "PASS" : "FAIL";
            std::snprintf(line, sizeof line, "%-32s %-6s %-8s %-24s ",
                          c["name"].get<std::string>().c_str(), c["kind"].get<std::string>().c_str(),
                          status, scalar_text(c["tol"]).c_str());
            os << line << scalar_text(c["value"]) << "\n";
        }
    }
    return os.str();
}

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json check(const std::string& name, const char* kind, Json value, std::optional<double> tol,
           std::optional<bool> pass) {
    Json c;
    c["name"] = name;
    c["kind"] = kind;
    c["value"] = std::move(value);
    c["tol"] = tol ? number(*tol) : Json(nullptr);
    c["pass"] = pass ? Json(*pass) : Json(nullptr);
    return c;
}

Json metadata() {
    Json m;
    m["tool"] = "pertcoul";
    m["version"] = PERTCOUL_VERSION;
    m["float_format"] = "%.17g";
    return m;
}

} // namespace pertcoul::cli
