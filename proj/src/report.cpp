#include "mtsp/report.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace mtsp {

std::string report_round(double value)
{
    if (!std::isfinite(value))
        throw std::invalid_argument("report_round needs a finite value");

    char buf[512];
    auto const [end, ec] = std::to_chars(buf, buf + sizeof buf, std::abs(value), std::chars_format::fixed);
    if (ec != std::errc())
        throw std::runtime_error("report_round: formatting failed");

    std::string const text(buf, end);
    auto const dot = text.find('.');
    std::string integral = dot == std::string::npos ? text : text.substr(0, dot);
    std::string fraction = dot == std::string::npos ? std::string() : text.substr(dot + 1);
    if (fraction.size() < 3)
        fraction.append(3 - fraction.size(), '0');

    // Half-up on the third fractional digit: digits = integral ++ two decimals.
    std::string digits = integral + fraction.substr(0, 2);
    if (fraction[2] >= '5') {
        int i = static_cast<int>(digits.size()) - 1;
        while (i >= 0 && digits[i] == '9') {
            digits[i] = '0';
            --i;
        }
        if (i < 0)
            digits.insert(digits.begin(), '1');
        else
            ++digits[i];
    }

    std::string out = digits.substr(0, digits.size() - 2) + "." + digits.substr(digits.size() - 2);
    bool const zero = out.find_first_not_of("0.") == std::string::npos;
    if (value < 0 && !zero)
        out.insert(out.begin(), '-');
    return out;
}

Summary summarize(std::span<double const> makespans, std::span<double const> times_to_best)
{
    Summary s;
    s.runs = static_cast<int>(makespans.size());
    if (makespans.empty())
        return s;

    s.best = makespans[0];
    double sum = 0.0;
    for (double v : makespans) {
        s.best = std::min(s.best, v);
        sum += v;
    }
    s.avg = sum / static_cast<double>(makespans.size());
    // Guard against the mean rounding just below the minimum.
    s.avg = std::max(s.avg, s.best);

    if (makespans.size() > 1) {
        double sq = 0.0;
        for (double v : makespans)
            sq += (v - s.avg) * (v - s.avg);
        s.std = std::sqrt(sq / static_cast<double>(makespans.size() - 1));
    }

    double t = 0.0;
    for (double v : times_to_best)
        t += v;
    s.avg_time_to_best = times_to_best.empty() ? 0.0 : t / static_cast<double>(times_to_best.size());
    return s;
}

std::optional<double> CutoffSpec::resolve(int num_nodes) const
{
    switch (kind) {
    case Kind::None: return std::nullopt;
    case Kind::PerNode: return value * num_nodes;
    case Kind::Seconds: return value;
    }
    return std::nullopt;
}

namespace {

double parse_positive(std::string const &text, std::string const &whole)
{
    double v = 0.0;
    auto const [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || !(v >= 0.0) || !std::isfinite(v))
        throw std::invalid_argument("malformed cutoff '" + whole + "'");
    return v;
}

}  // namespace

CutoffSpec parse_cutoff(std::string const &text)
{
    CutoffSpec spec;
    spec.text = text;
    if (text == "none" || text.empty())
        return spec;

    if (text.starts_with("n/")) {
        double const div = parse_positive(text.substr(2), text);
        if (div == 0.0)
            throw std::invalid_argument("malformed cutoff '" + text + "'");
        spec.kind = CutoffSpec::Kind::PerNode;
        spec.value = 1.0 / div;
    } else if (text.starts_with("n*")) {
        spec.kind = CutoffSpec::Kind::PerNode;
        spec.value = parse_positive(text.substr(2), text);
    } else if (text.ends_with("n")) {
        spec.kind = CutoffSpec::Kind::PerNode;
        spec.value = parse_positive(text.substr(0, text.size() - 1), text);
    } else {
        spec.kind = CutoffSpec::Kind::Seconds;
        spec.value = parse_positive(text, text);
    }
    return spec;
}

}  // namespace mtsp
