#include "comfort/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "comfort/error.hpp"

namespace comfort::io {
namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, sep)) out.push_back(trim(field));
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + what);
}

double parse_number(const std::string& text, std::size_t line_no) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || text.empty()) parse_error(line_no, "not a number: '" + text + "'");
    if (!std::isfinite(v)) parse_error(line_no, "non-finite value '" + text + "'");
    return v;
}

// "# key=value" comment lines.
bool parse_directive(const std::string& line, std::string& key, std::string& value) {
    const auto body = trim(std::string_view(line).substr(1));
    const auto eq = body.find('=');
    if (eq == std::string::npos) return false;
    key = trim(std::string_view(body).substr(0, eq));
    value = trim(std::string_view(body).substr(eq + 1));
    return true;
}

std::string format_g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    return out;
}

}  // namespace

TimeSeries read_signal_csv(std::istream& in) {
    std::optional<double> rate;
    std::string label;
    std::optional<std::size_t> columns;  // 1 = value, 2 = t_s,value
    std::vector<double> samples;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = trim(line);
        if (text.empty()) continue;
        if (text.front() == '#') {
            std::string key;
            std::string value;
            if (parse_directive(text, key, value)) {
                if (key == "sample_rate_hz") rate = parse_number(value, line_no);
                else if (key == "label") label = value;
            }
            continue;
        }
        if (!columns) {
            if (text == "value") columns = 1;
            else if (text == "t_s,value") columns = 2;
            else parse_error(line_no, "expected header 't_s,value' or 'value'");
            continue;
        }
        const auto fields = split(text, ',');
        if (fields.size() != *columns) {
            parse_error(line_no, "expected " + std::to_string(*columns) + " fields, got " +
                                     std::to_string(fields.size()));
        }
        samples.push_back(parse_number(fields.back(), line_no));
    }
    if (!rate) throw Error(ErrorKind::Parse, "missing '# sample_rate_hz=<f>' line");
    if (!columns) throw Error(ErrorKind::Parse, "missing header line");
    if (!(*rate > 0.0)) throw Error(ErrorKind::Parse, "sample rate must be positive");
    return TimeSeries(std::move(samples), *rate, std::move(label));
}

TimeSeries read_signal_csv(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_signal_csv(in);
}

void write_signal_csv(std::ostream& out, const TimeSeries& series) {
    out << "# sample_rate_hz=" << format_g9(series.sample_rate_hz()) << '\n';
    if (!series.label().empty()) out << "# label=" << series.label() << '\n';
    out << "t_s,value\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out << format_g9(static_cast<double>(i) / series.sample_rate_hz()) << ','
            << format_g9(series[i]) << '\n';
    }
}

void write_signal_csv(const std::filesystem::path& path, const TimeSeries& series) {
    auto out = open_output(path);
    write_signal_csv(out, series);
    if (!out) throw Error(ErrorKind::Io, "failed writing " + path.string());
}

StudyTable read_study_csv(std::istream& in) {
    std::optional<Measure> measure;
    bool header_seen = false;
    std::array<std::size_t, 4> column_of{};  // condition -> field index
    std::vector<std::string> ids;
    std::array<std::vector<double>, 4> columns;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = trim(line);
        if (text.empty()) continue;
        if (text.front() == '#') {
            std::string key;
            std::string value;
            if (parse_directive(text, key, value) && key == "measure") {
                if (value == "hr") measure = Measure::HeartRate;
                else if (value == "rr") measure = Measure::RespirationRate;
                else parse_error(line_no, "measure must be hr or rr");
            }
            continue;
        }
        const auto fields = split(text, ',');
        if (!header_seen) {
            if (fields.size() != 5 || fields[0] != "subject") {
                parse_error(line_no, "expected header 'subject,PLF,PTF,CLF,CTF'");
            }
            std::array<bool, 4> seen{};
            for (std::size_t f = 1; f < fields.size(); ++f) {
                const auto c = condition_from_code(fields[f]);
                if (!c || seen[static_cast<std::size_t>(*c)]) {
                    parse_error(line_no, "bad or repeated condition column '" + fields[f] + "'");
                }
                seen[static_cast<std::size_t>(*c)] = true;
                column_of[static_cast<std::size_t>(*c)] = f;
            }
            header_seen = true;
            continue;
        }
        if (fields.size() != 5) parse_error(line_no, "expected 5 fields");
        ids.push_back(fields[0]);
        for (auto c : kAllConditions) {
            const auto i = static_cast<std::size_t>(c);
            columns[i].push_back(parse_number(fields[column_of[i]], line_no));
        }
    }
    if (!measure) throw Error(ErrorKind::Parse, "missing '# measure=hr|rr' line");
    if (!header_seen) throw Error(ErrorKind::Parse, "missing header line");
    try {
        return StudyTable(*measure, std::move(ids), std::move(columns));
    } catch (const Error& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

StudyTable read_study_csv(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_study_csv(in);
}

void write_study_csv(std::ostream& out, const StudyTable& table) {
    out << "# measure=" << to_string(table.measure()) << '\n';
    out << "subject,PLF,PTF,CLF,CTF\n";
    for (std::size_t s = 0; s < table.subjects(); ++s) {
        out << table.subject_ids()[s];
        for (auto c : kAllConditions) out << ',' << format_g9(table.column(c)[s]);
        out << '\n';
    }
}

std::filesystem::path frame_file_name(std::size_t index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "frame_%06zu.rgb", index);
    return buf;
}

FrameSequence read_frame_archive(const std::filesystem::path& dir) {
    const auto meta_path = dir / "meta";
    if (!std::filesystem::is_regular_file(meta_path)) {
        throw Error(ErrorKind::Io, "frame archive " + dir.string() + " has no meta entry");
    }
    auto meta = open_input(meta_path);
    std::map<std::string, std::string> fields;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(meta, line)) {
        ++line_no;
        const auto text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) parse_error(line_no, "meta lines must be key=value");
        fields[trim(std::string_view(text).substr(0, eq))] = trim(std::string_view(text).substr(eq + 1));
    }
    auto need = [&](const char* key) {
        const auto it = fields.find(key);
        if (it == fields.end()) throw Error(ErrorKind::Parse, std::string("meta is missing '") + key + "'");
        return parse_number(it->second, 0);
    };
    const double width = need("width");
    const double height = need("height");
    const double fps = need("fps");
    const double count = need("frame_count");
    auto is_count = [](double v) { return v >= 0.0 && v == std::floor(v) && v < 1e9; };
    if (!is_count(width) || !is_count(height) || !is_count(count) || width == 0 || height == 0) {
        throw Error(ErrorKind::Parse, "meta width, height and frame_count must be positive integers");
    }

    FrameSequence frames(static_cast<int>(width), static_cast<int>(height), fps);
    for (std::size_t i = 0; i < static_cast<std::size_t>(count); ++i) {
        const auto path = dir / frame_file_name(i);
        if (!std::filesystem::is_regular_file(path)) {
            throw Error(ErrorKind::Io, "missing frame file " + path.string());
        }
        if (std::filesystem::file_size(path) != frames.frame_bytes()) {
            throw Error(ErrorKind::Parse, path.string() + " has the wrong size for " +
                                              std::to_string(frames.width()) + "x" +
                                              std::to_string(frames.height()) + " RGB");
        }
        auto in = open_input(path);
        std::vector<std::uint8_t> rgb(frames.frame_bytes());
        in.read(reinterpret_cast<char*>(rgb.data()), static_cast<std::streamsize>(rgb.size()));
        if (!in) throw Error(ErrorKind::Io, "short read on " + path.string());
        frames.push_back(std::move(rgb));
    }
    if (std::filesystem::is_regular_file(dir / frame_file_name(static_cast<std::size_t>(count)))) {
        throw Error(ErrorKind::Parse, "archive holds more frames than frame_count");
    }
    return frames;
}

void write_frame_archive(const std::filesystem::path& dir, const FrameSequence& frames) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(ErrorKind::Io, "cannot create " + dir.string() + ": " + ec.message());
    {
        auto meta = open_output(dir / "meta");
        meta << "width=" << frames.width() << '\n'
             << "height=" << frames.height() << '\n'
             << "fps=" << format_g9(frames.fps()) << '\n'
             << "frame_count=" << frames.frame_count() << '\n';
        if (!meta) throw Error(ErrorKind::Io, "failed writing meta");
    }
    for (std::size_t i = 0; i < frames.frame_count(); ++i) {
        auto out = open_output(dir / frame_file_name(i));
        const auto rgb = frames.frame(i);
        out.write(reinterpret_cast<const char*>(rgb.data()), static_cast<std::streamsize>(rgb.size()));
        if (!out) throw Error(ErrorKind::Io, "failed writing frame " + std::to_string(i));
    }
}

}  // namespace comfort::io
