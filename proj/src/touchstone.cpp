#include "msaw/touchstone.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace msaw {
namespace {

std::string upper(std::string s)
{
    for (auto& c : s)
        c = (char)std::toupper((unsigned char)c);
    return s;
}

[[noreturn]] void fail(int line, const std::string& what)
{
    throw std::runtime_error("touchstone parse error at line " + std::to_string(line) + ": " + what);
}

std::complex<double> decode_pair(SparamFormat fmt, double a, double b)
{
    switch (fmt) {
    case SparamFormat::RI:
        return {a, b};
    case SparamFormat::MA:
        return std::polar(a, b * M_PI / 180.0);
    case SparamFormat::DB:
        return std::polar(std::pow(10.0, a / 20.0), b * M_PI / 180.0);
    }
    throw std::logic_error("unreachable");
}

} // namespace

double frequency_unit_scale(FrequencyUnit unit)
{
    switch (unit) {
    case FrequencyUnit::Hz:
        return 1.0;
    case FrequencyUnit::kHz:
        return 1e3;
    case FrequencyUnit::MHz:
        return 1e6;
    case FrequencyUnit::GHz:
        return 1e9;
    }
    throw std::logic_error("unreachable");
}

TouchstoneRecord read_s1p(const std::string& text)
{
    TouchstoneRecord rec;
    bool have_header = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    double unit_scale = 1.0;

    while (std::getline(in, line)) {
        ++lineno;
        // strip trailing CR and inline comments
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        auto bang = line.find('!');
        if (bang != std::string::npos) {
            if (bang == line.find_first_not_of(" \t")) {
                rec.comments.push_back(line.substr(bang + 1));
                continue;
            }
            line.erase(bang);
        }
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos)
            continue;

        if (line[first] == '#') {
            if (have_header)
                fail(lineno, "duplicate option header");
            std::istringstream hs(line.substr(first + 1));
            std::string tok;
            bool expect_r = false;
            while (hs >> tok) {
                std::string t = upper(tok);
                if (expect_r) {
                    try {
                        rec.reference_ohms = std::stod(t);
                    } catch (...) {
                        fail(lineno, "bad reference resistance '" + tok + "'");
                    }
                    expect_r = false;
                } else if (t == "HZ")
                    rec.unit = FrequencyUnit::Hz;
                else if (t == "KHZ")
                    rec.unit = FrequencyUnit::kHz;
                else if (t == "MHZ")
                    rec.unit = FrequencyUnit::MHz;
                else if (t == "GHZ")
                    rec.unit = FrequencyUnit::GHz;
                else if (t == "S")
                    ; // parameter type, only S is meaningful for .s1p
                else if (t == "RI")
                    rec.format = SparamFormat::RI;
                else if (t == "MA")
                    rec.format = SparamFormat::MA;
                else if (t == "DB")
                    rec.format = SparamFormat::DB;
                else if (t == "R")
                    expect_r = true;
                else
                    fail(lineno, "unknown header token '" + tok + "'");
            }
            if (expect_r)
                fail(lineno, "header 'R' without a resistance value");
            have_header = true;
            unit_scale = frequency_unit_scale(rec.unit);
            continue;
        }

        if (!have_header)
            fail(lineno, "data before the '#' option header");
        std::istringstream ds(line);
        double f, a, b;
        if (!(ds >> f >> a >> b))
            fail(lineno, "expected 3 columns (frequency and one S-parameter pair)");
        std::string extra;
        if (ds >> extra)
            fail(lineno, "expected 3 columns, got more");
        double f_hz = f * unit_scale;
        if (!rec.rows.empty() && f_hz <= rec.rows.back().first)
            fail(lineno, "frequencies must be strictly increasing");
        rec.rows.emplace_back(f_hz, decode_pair(rec.format, a, b));
    }
    if (!have_header)
        fail(lineno, "missing '#' option header");
    return rec;
}

std::string write_s1p(const TouchstoneRecord& record, SparamFormat format)
{
    std::ostringstream out;
    for (auto& c : record.comments)
        out << "!" << c << "\n";
    const char* fmt_name = format == SparamFormat::RI ? "RI" : format == SparamFormat::MA ? "MA" : "DB";
    char buf[96];
    std::snprintf(buf, sizeof buf, "# HZ S %s R %.17g\n", fmt_name, record.reference_ohms);
    out << buf;
    for (auto& [f, s] : record.rows) {
        double a = 0.0, b = 0.0;
        switch (format) {
        case SparamFormat::RI:
            a = s.real();
            b = s.imag();
            break;
        case SparamFormat::MA:
            a = std::abs(s);
            b = std::arg(s) * 180.0 / M_PI;
            break;
        case SparamFormat::DB:
            a = 20.0 * std::log10(std::abs(s));
            b = std::arg(s) * 180.0 / M_PI;
            break;
        }
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", f, a, b);
        out << buf;
    }
    return out.str();
}

Spectrum to_spectrum(const TouchstoneRecord& record, double grid_tolerance)
{
    if (record.rows.size() < 2)
        throw std::invalid_argument("to_spectrum: need at least 2 rows");
    int n = (int)record.rows.size();
    double f0 = record.rows.front().first;
    double f1 = record.rows.back().first;
    double df = (f1 - f0) / (n - 1);
    for (int i = 0; i < n; ++i) {
        double expected = f0 + i * df;
        if (std::abs(record.rows[i].first - expected) > grid_tolerance * df)
            throw std::invalid_argument("to_spectrum: frequency grid is not uniform");
    }
    Spectrum s;
    s.f_start = f0;
    s.f_stop = f1;
    s.n_points = n;
    s.values.reserve(n);
    for (auto& [f, v] : record.rows)
        s.values.push_back(v);
    return s;
}

TouchstoneRecord from_spectrum(const Spectrum& spectrum)
{
    TouchstoneRecord rec;
    rec.rows.reserve(spectrum.n_points);
    for (int i = 0; i < spectrum.n_points; ++i)
        rec.rows.emplace_back(spectrum.frequency(i), spectrum.values[i]);
    return rec;
}

} // namespace msaw
