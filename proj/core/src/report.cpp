#include "cmcgk/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cmcgk::cli {

bool Report::all_pass() const {
    if (status != "ok") return false;
    for (const CheckResult& c : checks)
        if (!c.pass()) return false;
    return true;
}

void Report::add(const std::string& name, double value, double tolerance, bool expected_fail) {
    checks.push_back({name, value, tolerance, expected_fail});
}

namespace {

std::string fmt_double(double v) {
    if (!std::isfinite(v)) throw std::runtime_error("report: refusing to serialize a non-finite value");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

}  // namespace

std::string to_json(const Report& r) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"schema_version\": " << kReportSchemaVersion << ",\n";
    os << "  \"command\": \"" << escape(r.command) << "\",\n";
    os << "  \"subject\": \"" << escape(r.subject) << "\",\n";
    os << "  \"status\": \"" << escape(r.status) << "\",\n";
    os << "  \"note\": \"" << escape(r.note) << "\",\n";
    os << "  \"passed\": " << (r.all_pass() ? "true" : "false") << ",\n";
    os << "  \"checks\": [\n";
    for (std::size_t k = 0; k < r.checks.size(); ++k) {
        const CheckResult& c = r.checks[k];
        os << "    {\"name\": \"" << escape(c.name) << "\", \"value\": " << fmt_double(c.value)
           << ", \"tolerance\": " << fmt_double(c.tolerance) << ", \"expected_fail\": "
           << (c.expected_fail ? "true" : "false") << ", \"pass\": "
           << (c.pass() ? "true" : "false") << "}" << (k + 1 < r.checks.size() ? "," : "")
           << "\n";
    }
    os << "  ]\n";
    os << "}\n";
    return os.str();
}

std::string to_text(const Report& r) {
    std::ostringstream os;
    for (const CheckResult& c : r.checks) {
        const char* tag = c.pass() ? (c.expected_fail ? "XFAIL" : "PASS") : "FAIL";
        os << "[" << tag << "] " << c.name << ": " << fmt_double(c.value)
           << (c.expected_fail ? " > " : " <= ") << fmt_double(c.tolerance) << "\n";
    }
    os << (r.all_pass() ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT");
    if (r.status != "ok") os << " (status: " << r.status << (r.note.empty() ? "" : ", " + r.note) << ")";
    os << "\n";
    return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << contents;
    if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace cmcgk::cli
