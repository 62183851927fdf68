#include "debyedec/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include "debyedec/model.hpp"

namespace debyedec {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_number(double v) {
    if (!std::isfinite(v)) return "null";
    return fmt17(v);
}

std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    out += '"';
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

[[noreturn]] void fail_at(int line, const std::string& message) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + message);
}

double parse_field(std::string_view field, int line, const char* column) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        fail_at(line, std::string("cannot parse ") + column + " value \"" +
                          std::string(field) + "\"");
    if (!std::isfinite(value))
        fail_at(line, std::string("non-finite ") + column + " value");
    return value;
}

} // namespace

Spectrum read_spectrum_csv(std::istream& in,
                           std::vector<std::string>* warnings) {
    struct Record {
        double t, q, v;
        int line;
    };
    std::vector<Record> records;
    bool header_seen = false;
    bool has_var = false;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto fields = split_fields(line);
        if (!header_seen) {
            if (fields.size() == 2 && fields[0] == "T" && fields[1] == "Q")
                has_var = false;
            else if (fields.size() == 3 && fields[0] == "T" &&
                     fields[1] == "Q" && fields[2] == "var_eps")
                has_var = true;
            else
                fail_at(line_no,
                        "expected header \"T,Q\" or \"T,Q,var_eps\"");
            header_seen = true;
            continue;
        }
        if (fields.size() != (has_var ? 3u : 2u))
            fail_at(line_no, "expected " +
                                 std::to_string(has_var ? 3 : 2) +
                                 " comma-separated values");
        Record rec;
        rec.t = parse_field(fields[0], line_no, "T");
        rec.q = parse_field(fields[1], line_no, "Q");
        rec.v = has_var ? parse_field(fields[2], line_no, "var_eps") : 0.0;
        rec.line = line_no;
        if (!(rec.t > 0.0))
            fail_at(line_no, "non-positive temperature " + fmt17(rec.t));
        if (has_var && rec.v < 0.0)
            fail_at(line_no, "negative var_eps");
        records.push_back(rec);
    }
    if (!header_seen) fail_at(line_no, "missing header row");
    if (records.empty()) fail_at(line_no, "no data rows");

    bool ordered = true;
    for (std::size_t i = 1; i < records.size(); ++i)
        if (records[i].t < records[i - 1].t) ordered = false;
    if (!ordered) {
        std::stable_sort(records.begin(), records.end(),
                         [](const Record& a, const Record& b) {
                             return a.t < b.t;
                         });
        if (warnings)
            warnings->push_back(
                "rows were not ordered by temperature; sorted ascending");
    }
    for (std::size_t i = 1; i < records.size(); ++i)
        if (records[i].t == records[i - 1].t)
            fail_at(std::max(records[i].line, records[i - 1].line),
                    "duplicate temperature " + fmt17(records[i].t));
    if (has_var)
        for (const Record& rec : records)
            if (rec.v != records.front().v)
                fail_at(rec.line, "var_eps column is not constant");

    Spectrum spectrum;
    spectrum.temperatures.reserve(records.size());
    spectrum.intensities.reserve(records.size());
    for (const Record& rec : records) {
        spectrum.temperatures.push_back(rec.t);
        spectrum.intensities.push_back(rec.q);
    }
    if (has_var) spectrum.var_eps = records.front().v;
    validate(spectrum);
    return spectrum;
}

Spectrum read_spectrum_csv(const std::string& path,
                           std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    try {
        return read_spectrum_csv(in, warnings);
    } catch (const std::runtime_error& err) {
        throw std::runtime_error(path + ": " + err.what());
    }
}

void write_spectrum_csv(const Spectrum& spectrum, std::ostream& out) {
    validate(spectrum);
    const bool has_var = spectrum.var_eps.has_value();
    out << (has_var ? "T,Q,var_eps\n" : "T,Q\n");
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        out << fmt17(spectrum.temperatures[i]) << ','
            << fmt17(spectrum.intensities[i]);
        if (has_var) out << ',' << fmt17(*spectrum.var_eps);
        out << '\n';
    }
}

void write_spectrum_csv(const Spectrum& spectrum, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open file for writing");
    write_spectrum_csv(spectrum, out);
    if (!out.flush()) throw std::runtime_error(path + ": write failed");
}

namespace {

std::ostream& pad(std::ostream& out, int depth) {
    for (int i = 0; i < depth; ++i) out << "  ";
    return out;
}

void emit_string_array(std::ostream& out, int depth,
                       const std::vector<std::string>& items) {
    if (items.empty()) {
        out << "[]";
        return;
    }
    out << "[\n";
    for (std::size_t i = 0; i < items.size(); ++i) {
        pad(out, depth + 1) << json_quote(items[i]);
        out << (i + 1 < items.size() ? ",\n" : "\n");
    }
    pad(out, depth) << "]";
}

void emit_test(std::ostream& out, int depth, const TestResult& test) {
    out << "{\n";
    pad(out, depth + 1) << "\"statistic\": " << json_number(test.statistic)
                        << ",\n";
    pad(out, depth + 1) << "\"p_value\": " << json_number(test.p_value)
                        << ",\n";
    pad(out, depth + 1) << "\"passed\": " << (test.passed ? "true" : "false")
                        << "\n";
    pad(out, depth) << "}";
}

void emit_dw(std::ostream& out, int depth, const DurbinWatsonResult& dw) {
    out << "{\n";
    pad(out, depth + 1) << "\"lags\": ";
    if (dw.lags.empty()) {
        out << "[],\n";
    } else {
        out << "[\n";
        for (std::size_t i = 0; i < dw.lags.size(); ++i) {
            pad(out, depth + 2)
                << "{\"lag\": " << dw.lags[i].lag
                << ", \"statistic\": " << json_number(dw.lags[i].statistic)
                << ", \"p_value\": " << json_number(dw.lags[i].p_value)
                << "}";
            out << (i + 1 < dw.lags.size() ? ",\n" : "\n");
        }
        pad(out, depth + 1) << "],\n";
    }
    pad(out, depth + 1) << "\"passed\": " << (dw.passed ? "true" : "false")
                        << "\n";
    pad(out, depth) << "}";
}

void emit_report(std::ostream& out, int depth, const AdequacyReport& report) {
    out << "{\n";
    pad(out, depth + 1) << "\"normality\": ";
    emit_test(out, depth + 1, report.normality);
    out << ",\n";
    pad(out, depth + 1) << "\"zero_mean\": ";
    emit_test(out, depth + 1, report.zero_mean);
    out << ",\n";
    pad(out, depth + 1) << "\"autocorrelation\": ";
    emit_dw(out, depth + 1, report.autocorrelation);
    out << ",\n";
    pad(out, depth + 1) << "\"variance\": ";
    if (report.variance)
        emit_test(out, depth + 1, *report.variance);
    else
        out << "null";
    out << ",\n";
    pad(out, depth + 1) << "\"adequate\": "
                        << (report.adequate ? "true" : "false") << ",\n";
    pad(out, depth + 1) << "\"notes\": ";
    emit_string_array(out, depth + 1, report.notes);
    out << "\n";
    pad(out, depth) << "}";
}

void emit_components(std::ostream& out, int depth, const ParameterVector& params,
                     const DecompositionConfig& config) {
    const std::size_t n = component_count(params);
    out << "[\n";
    for (std::size_t j = 0; j < n; ++j) {
        const double q0 = params[j];
        const double t0 = params[n + j];
        std::string e = "null";
        try {
            e = json_number(activation_energy(t0, config.f, config.constants));
        } catch (const std::exception&) {
        }
        pad(out, depth + 1) << "{\"Q0\": " << json_number(q0)
                            << ", \"T0\": " << json_number(t0)
                            << ", \"E\": " << e << "}";
        out << (j + 1 < n ? ",\n" : "\n");
    }
    pad(out, depth) << "]";
}

void emit_fit(std::ostream& out, int depth, const FitResult& fit,
              const DecompositionConfig& config) {
    out << "{\n";
    pad(out, depth + 1) << "\"components\": ";
    emit_components(out, depth + 1, fit.params, config);
    out << ",\n";
    pad(out, depth + 1) << "\"sse\": " << json_number(fit.sse) << ",\n";
    pad(out, depth + 1) << "\"iterations\": " << fit.iterations << ",\n";
    pad(out, depth + 1) << "\"converged\": "
                        << (fit.converged ? "true" : "false") << ",\n";
    pad(out, depth + 1) << "\"termination_reason\": \""
                        << to_string(fit.termination_reason) << "\"\n";
    pad(out, depth) << "}";
}

} // namespace

void write_result_json(const DecompositionResult& result, std::ostream& out) {
    out << "{\n";
    pad(out, 1) << "\"status\": \"" << to_string(result.status) << "\",\n";
    pad(out, 1) << "\"accepted\": ";
    if (const Attempt* accepted = result.accepted_attempt()) {
        out << "{\n";
        pad(out, 2) << "\"components\": ";
        emit_components(out, 2, accepted->fit->params, result.config);
        out << ",\n";
        pad(out, 2) << "\"sse\": " << json_number(accepted->fit->sse) << ",\n";
        pad(out, 2) << "\"report\": ";
        emit_report(out, 2, *accepted->report);
        out << "\n";
        pad(out, 1) << "}";
    } else {
        out << "null";
    }
    out << ",\n";
    pad(out, 1) << "\"attempts\": ";
    if (result.attempts.empty()) {
        out << "[]\n";
    } else {
        out << "[\n";
        for (std::size_t i = 0; i < result.attempts.size(); ++i) {
            const Attempt& attempt = result.attempts[i];
            pad(out, 2) << "{\n";
            pad(out, 3) << "\"n\": " << attempt.n_components << ",\n";
            pad(out, 3) << "\"fit\": ";
            if (attempt.fit)
                emit_fit(out, 3, *attempt.fit, result.config);
            else
                out << "null";
            out << ",\n";
            pad(out, 3) << "\"report\": ";
            if (attempt.report)
                emit_report(out, 3, *attempt.report);
            else
                out << "null";
            out << ",\n";
            pad(out, 3) << "\"warnings\": ";
            emit_string_array(out, 3, attempt.warnings);
            out << ",\n";
            pad(out, 3) << "\"error\": "
                        << (attempt.error ? json_quote(*attempt.error)
                                          : "null")
                        << "\n";
            pad(out, 2) << "}";
            out << (i + 1 < result.attempts.size() ? ",\n" : "\n");
        }
        pad(out, 1) << "]\n";
    }
    out << "}\n";
}

void write_result_json(const DecompositionResult& result,
                       const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open file for writing");
    write_result_json(result, out);
    if (!out.flush()) throw std::runtime_error(path + ": write failed");
}

namespace {

// plot geometry (SVG user units)
constexpr double kWidth = 800.0;
constexpr double kHeight = 620.0;
constexpr double kLeft = 64.0;
constexpr double kRight = 784.0;
constexpr double kMainTop = 16.0;
constexpr double kMainBottom = 396.0;
constexpr double kResTop = 436.0;
constexpr double kResBottom = 556.0;

const char* const kPalette[] = {"#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
                                "#17becf", "#bcbd22", "#e377c2", "#7f7f7f"};

std::string fmt_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

struct Scale {
    double lo = 0.0, hi = 1.0, out_lo = 0.0, out_hi = 1.0;
    double operator()(double v) const {
        return out_lo + (v - lo) / (hi - lo) * (out_hi - out_lo);
    }
};

std::string polyline_path(const std::vector<double>& xs,
                          const std::vector<double>& ys, const Scale& sx,
                          const Scale& sy) {
    std::string d;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        d += i == 0 ? "M" : " L";
        d += fmt_coord(sx(xs[i]));
        d += ' ';
        d += fmt_coord(sy(ys[i]));
    }
    return d;
}

} // namespace

void emit_plot_svg(const Spectrum& spectrum, const DecompositionResult& result,
                   std::ostream& out) {
    validate(spectrum);
    const Attempt* shown = result.accepted_attempt();
    if (!shown)
        for (auto it = result.attempts.rbegin(); it != result.attempts.rend();
             ++it)
            if (it->fit) {
                shown = &*it;
                break;
            }

    const double t_lo = spectrum.temperatures.front();
    const double t_hi = spectrum.temperatures.back();

    // dense grid for smooth curves
    std::vector<double> curve_t;
    std::vector<double> total;
    std::vector<std::vector<double>> parts;
    std::vector<double> residuals;
    if (shown) {
        const std::size_t m = 512;
        curve_t.resize(m);
        for (std::size_t i = 0; i < m; ++i)
            curve_t[i] = t_lo + (t_hi - t_lo) * static_cast<double>(i) /
                                    static_cast<double>(m - 1);
        const ParameterVector& params = shown->fit->params;
        const std::size_t n = component_count(params);
        total = spectrum_model(curve_t, params, result.config.f,
                               result.config.constants);
        for (std::size_t j = 0; j < n; ++j) {
            const ParameterVector one = {params[j], params[n + j]};
            parts.push_back(spectrum_model(curve_t, one, result.config.f,
                                           result.config.constants));
        }
        residuals = shown->fit->residuals;
    }

    double q_lo = 0.0, q_hi = 0.0;
    for (double q : spectrum.intensities) {
        q_lo = std::min(q_lo, q);
        q_hi = std::max(q_hi, q);
    }
    for (double q : total) {
        q_lo = std::min(q_lo, q);
        q_hi = std::max(q_hi, q);
    }
    if (q_hi == q_lo) q_hi = q_lo + 1.0;
    const double q_pad = 0.05 * (q_hi - q_lo);

    double r_abs = 0.0;
    for (double r : residuals) r_abs = std::max(r_abs, std::abs(r));
    if (r_abs == 0.0) r_abs = 1.0;

    const Scale sx{t_lo, t_hi, kLeft, kRight};
    const Scale sy{q_lo - q_pad, q_hi + q_pad, kMainBottom, kMainTop};
    const Scale sr{-1.1 * r_abs, 1.1 * r_abs, kResBottom, kResTop};

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
        << kHeight << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" fill=\"white\"/>\n";

    // panel frames
    out << "<rect x=\"" << kLeft << "\" y=\"" << kMainTop << "\" width=\""
        << kRight - kLeft << "\" height=\"" << kMainBottom - kMainTop
        << "\" fill=\"none\" stroke=\"#444444\"/>\n";
    out << "<rect x=\"" << kLeft << "\" y=\"" << kResTop << "\" width=\""
        << kRight - kLeft << "\" height=\"" << kResBottom - kResTop
        << "\" fill=\"none\" stroke=\"#444444\"/>\n";

    // x ticks under the residual panel
    for (int k = 0; k <= 4; ++k) {
        const double t = t_lo + (t_hi - t_lo) * k / 4.0;
        const double x = sx(t);
        out << "<line x1=\"" << fmt_coord(x) << "\" y1=\"" << kResBottom
            << "\" x2=\"" << fmt_coord(x) << "\" y2=\"" << kResBottom + 5
            << "\" stroke=\"#444444\"/>\n";
        out << "<text x=\"" << fmt_coord(x) << "\" y=\"" << kResBottom + 20
            << "\" font-family=\"sans-serif\" font-size=\"12\" "
               "text-anchor=\"middle\">"
            << fmt_label(t) << "</text>\n";
    }
    // y ticks on the main panel
    for (int k = 0; k <= 4; ++k) {
        const double q = (q_lo - q_pad) + (q_hi - q_lo + 2 * q_pad) * k / 4.0;
        const double y = sy(q);
        out << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << fmt_coord(y)
            << "\" x2=\"" << kLeft << "\" y2=\"" << fmt_coord(y)
            << "\" stroke=\"#444444\"/>\n";
        out << "<text x=\"" << kLeft - 8 << "\" y=\"" << fmt_coord(y + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\" "
               "text-anchor=\"end\">"
            << fmt_label(q) << "</text>\n";
    }

    // axis labels
    out << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kHeight - 14
        << "\" font-family=\"sans-serif\" font-size=\"14\" "
           "text-anchor=\"middle\">T (K)</text>\n";
    out << "<text x=\"18\" y=\"" << (kMainTop + kMainBottom) / 2
        << "\" font-family=\"sans-serif\" font-size=\"14\" "
           "text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << (kMainTop + kMainBottom) / 2 << ")\">Q</text>\n";
    out << "<text x=\"18\" y=\"" << (kResTop + kResBottom) / 2
        << "\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << (kResTop + kResBottom) / 2 << ")\">residual</text>\n";

    // measured points
    for (std::size_t i = 0; i < spectrum.size(); ++i)
        out << "<circle cx=\"" << fmt_coord(sx(spectrum.temperatures[i]))
            << "\" cy=\"" << fmt_coord(sy(spectrum.intensities[i]))
            << "\" r=\"2.5\" fill=\"#1f77b4\" fill-opacity=\"0.6\"/>\n";

    // component curves, dashed
    for (std::size_t j = 0; j < parts.size(); ++j)
        out << "<path d=\"" << polyline_path(curve_t, parts[j], sx, sy)
            << "\" fill=\"none\" stroke=\""
            << kPalette[j % (sizeof(kPalette) / sizeof(kPalette[0]))]
            << "\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";

    // total fitted curve, solid
    if (!total.empty())
        out << "<path d=\"" << polyline_path(curve_t, total, sx, sy)
            << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.8\"/>\n";

    // residual panel: zero line plus points
    out << "<line x1=\"" << kLeft << "\" y1=\"" << fmt_coord(sr(0.0))
        << "\" x2=\"" << kRight << "\" y2=\"" << fmt_coord(sr(0.0))
        << "\" stroke=\"#999999\"/>\n";
    for (std::size_t i = 0; i < residuals.size(); ++i)
        out << "<circle cx=\"" << fmt_coord(sx(spectrum.temperatures[i]))
            << "\" cy=\"" << fmt_coord(sr(residuals[i]))
            << "\" r=\"2\" fill=\"#1f77b4\" fill-opacity=\"0.6\"/>\n";

    out << "</svg>\n";
}

void emit_plot_svg(const Spectrum& spectrum, const DecompositionResult& result,
                   const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open file for writing");
    emit_plot_svg(spectrum, result, out);
    if (!out.flush()) throw std::runtime_error(path + ": write failed");
}

} // namespace debyedec
