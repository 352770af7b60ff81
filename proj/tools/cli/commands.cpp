#include "cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/report_json.hpp"
#include "comfort/error.hpp"
#include "comfort/io.hpp"
#include "comfort/ippg.hpp"
#include "comfort/study_data.hpp"
#include "comfort/suggest.hpp"
#include "comfort/synth.hpp"
#include "comfort/vitals.hpp"

namespace comfort::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kSeedEnv = "COMFORT_VITALS_SEED";

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::TooShort:
        case ErrorKind::InsufficientPeaks:
        case ErrorKind::EstimationFailed:
        case ErrorKind::InsufficientData:
        case ErrorKind::DegenerateInput:
            return kExitEstimation;
        default:
            return kExitUsage;
    }
}

std::uint64_t parse_seed(const std::string& text) {
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
        throw Error(ErrorKind::InvalidParameter, std::string(kSeedEnv) + " is not an unsigned integer: " + text);
    }
    return v;
}

// --seed wins, then the environment, then the built-in default.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv(kSeedEnv); env != nullptr) return parse_seed(env);
    return kDefaultSeed;
}

Roi parse_roi(const std::string& text) {
    int v[4];
    const char* p = text.data();
    const char* end = p + text.size();
    for (int i = 0; i < 4; ++i) {
        auto [next, ec] = std::from_chars(p, end, v[i]);
        if (ec != std::errc{}) break;
        p = next;
        if (i == 3) {
            if (p == end) return Roi{v[0], v[1], v[2], v[3]};
            break;
        }
        if (p == end || *p != ',') break;
        ++p;
    }
    throw Error(ErrorKind::Parse, "ROI must be x,y,w,h: " + text);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// synth ---------------------------------------------------------------------

struct SignalSynthArgs {
    SynthSpec spec;
    std::optional<std::uint64_t> seed;
    std::string out_path;
};

void add_signal_synth_options(CLI::App* sub, SignalSynthArgs& a) {
    sub->add_option("--rate", a.spec.rate_per_min, "Events per minute")->required();
    sub->add_option("--duration", a.spec.duration_s, "Seconds")->capture_default_str();
    sub->add_option("--fs", a.spec.sample_rate_hz, "Sample rate in Hz")->capture_default_str();
    sub->add_option("--noise", a.spec.noise_rms, "Gaussian noise RMS")->capture_default_str();
    sub->add_option("--drift", a.spec.baseline_drift_amp, "Baseline drift amplitude")->capture_default_str();
    sub->add_option("--seed", a.seed, "Generator seed");
    sub->add_option("--out", a.out_path, "Output CSV (stdout when omitted)");
}

int write_series(const TimeSeries& ts, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        io::write_signal_csv(out, ts);
    } else {
        io::write_signal_csv(fs::path(path), ts);
    }
    return kExitOk;
}

struct FrameSynthArgs {
    double hr = 0.0;
    double rr = 0.0;
    double fps = 30.0;
    double duration = 60.0;
    int width = 64;
    int height = 48;
    double pixel_noise = FrameSynthOptions{}.pixel_noise;
    std::optional<std::uint64_t> seed;
    std::string out_dir;
};

// ippg ----------------------------------------------------------------------

json rate_or_null(const std::optional<RateEstimate>& est) {
    return est ? json(est->rate_per_min) : json(nullptr);
}

// suggest -------------------------------------------------------------------

struct SuggestArgs {
    std::string activity;
    double temp = 0.0;
    double humidity = 0.0;
    double wear_hours = 0.0;
    std::optional<double> hr;
    std::optional<double> rr;
    std::optional<double> hr_baseline;
    std::string ecg_path;
    std::string resp_path;
    std::string frames_dir;
    std::string roi;
    std::vector<std::string> positive;
    std::vector<std::string> negative;
    std::optional<double> emotion;
};

RateEstimate manual_estimate(double rate) {
    RateEstimate est;
    est.rate_per_min = rate;
    return est;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Comfort parameters from physiological signals, study statistics and garment suggestions",
                 "comfort-vitals"};
    app.require_subcommand(1);

    // synth
    auto* synth = app.add_subcommand("synth", "Generate synthetic signals or frames");
    synth->require_subcommand(1);
    SignalSynthArgs ecg_args;
    ecg_args.spec.sample_rate_hz = 250.0;
    auto* synth_ecg_cmd = synth->add_subcommand("ecg", "Synthetic ECG as signal CSV");
    add_signal_synth_options(synth_ecg_cmd, ecg_args);
    SignalSynthArgs resp_args;
    resp_args.spec.sample_rate_hz = 32.0;
    auto* synth_resp_cmd = synth->add_subcommand("resp", "Synthetic respiration as signal CSV");
    add_signal_synth_options(synth_resp_cmd, resp_args);
    FrameSynthArgs frame_args;
    auto* synth_frames_cmd = synth->add_subcommand("frames", "Synthetic face frames as a frame archive");
    synth_frames_cmd->add_option("--hr", frame_args.hr, "Pulse rate in bpm")->required();
    synth_frames_cmd->add_option("--rr", frame_args.rr, "Breathing rate per minute")->required();
    synth_frames_cmd->add_option("--fps", frame_args.fps)->capture_default_str();
    synth_frames_cmd->add_option("--duration", frame_args.duration, "Seconds")->capture_default_str();
    synth_frames_cmd->add_option("--width", frame_args.width)->capture_default_str();
    synth_frames_cmd->add_option("--height", frame_args.height)->capture_default_str();
    synth_frames_cmd->add_option("--pixel-noise", frame_args.pixel_noise)->capture_default_str();
    synth_frames_cmd->add_option("--seed", frame_args.seed, "Generator seed");
    synth_frames_cmd->add_option("--out", frame_args.out_dir, "Archive directory")->required();

    // process-ecg / process-resp
    std::string ecg_input;
    auto* process_ecg = app.add_subcommand("process-ecg", "Heart rate from an ECG signal CSV");
    process_ecg->add_option("path", ecg_input, "Signal CSV")->required();
    std::string resp_input;
    auto* process_resp = app.add_subcommand("process-resp", "Respiration rate from a respiration signal CSV");
    process_resp->add_option("path", resp_input, "Signal CSV")->required();

    // ippg
    std::string archive;
    std::string ippg_roi;
    auto* ippg = app.add_subcommand("ippg", "Heart and respiration rate from a frame archive");
    ippg->add_option("archive", archive, "Frame archive directory")->required();
    ippg->add_option("--roi", ippg_roi, "x,y,w,h (default: centered 40% x 30%)");

    // analyze-study
    std::string study_path;
    std::string embedded;
    std::string format = "json";
    auto* analyze = app.add_subcommand("analyze-study", "Descriptive statistics and paired t-tests");
    auto* path_opt = analyze->add_option("path", study_path, "Study CSV");
    auto* embedded_opt = analyze->add_option("--embedded", embedded, "Use the shipped dataset")
                             ->check(CLI::IsMember({"hr", "rr"}));
    path_opt->excludes(embedded_opt);
    analyze->add_option("--format", format)->check(CLI::IsMember({"json", "table"}))->capture_default_str();

    // suggest
    SuggestArgs sa;
    auto* suggest = app.add_subcommand("suggest", "Fabric and fit suggestion");
    suggest->add_option("--activity", sa.activity)->required()->check(CLI::IsMember({"rest", "moderate", "intense"}));
    suggest->add_option("--temp", sa.temp, "Ambient temperature, C")->required();
    suggest->add_option("--humidity", sa.humidity, "Relative humidity, %")->required();
    suggest->add_option("--wear-hours", sa.wear_hours, "Hours the garment has been worn")->capture_default_str();
    auto* hr_opt = suggest->add_option("--hr", sa.hr, "Measured heart rate, bpm");
    auto* rr_opt = suggest->add_option("--rr", sa.rr, "Measured respiration rate, per minute");
    suggest->add_option("--hr-baseline", sa.hr_baseline, "Resting heart rate, bpm");
    auto* ecg_opt = suggest->add_option("--ecg", sa.ecg_path, "ECG signal CSV for heart rate");
    auto* resp_opt = suggest->add_option("--resp", sa.resp_path, "Respiration signal CSV");
    auto* frames_opt = suggest->add_option("--frames", sa.frames_dir, "Frame archive for heart and respiration rate");
    suggest->add_option("--roi", sa.roi, "ROI for --frames, x,y,w,h")->needs(frames_opt);
    auto* pos_opt = suggest->add_option("--positive", sa.positive, "soft,comfortable,relaxed")->delimiter(',');
    auto* neg_opt = suggest->add_option("--negative", sa.negative, "stiff,itchy,annoyed")->delimiter(',');
    auto* emo_opt = suggest->add_option("--emotion", sa.emotion, "Emotion score in [-1, 1]")
                        ->check(CLI::Range(-1.0, 1.0));
    hr_opt->excludes(ecg_opt)->excludes(frames_opt);
    rr_opt->excludes(resp_opt)->excludes(frames_opt);
    ecg_opt->excludes(frames_opt);
    resp_opt->excludes(frames_opt);
    emo_opt->excludes(pos_opt)->excludes(neg_opt);

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("comfort-vitals");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
        out << target->help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        const CLI::App* target = &app;
        while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
        err << "error: " << e.what() << "\n\n" << target->help();
        return kExitUsage;
    }

    try {
        if (*synth_ecg_cmd || *synth_resp_cmd) {
            auto& a = *synth_ecg_cmd ? ecg_args : resp_args;
            a.spec.seed = resolve_seed(a.seed);
            const auto ts = *synth_ecg_cmd ? synth_ecg(a.spec) : synth_resp(a.spec);
            return write_series(ts, a.out_path, out);
        }
        if (*synth_frames_cmd) {
            FrameSynthOptions opts;
            opts.seed = resolve_seed(frame_args.seed);
            opts.pixel_noise = frame_args.pixel_noise;
            const auto frames = synth_frames(frame_args.hr, frame_args.rr, frame_args.fps, frame_args.duration,
                                             frame_args.width, frame_args.height, opts);
            io::write_frame_archive(frame_args.out_dir, frames);
            return kExitOk;
        }
        if (*process_ecg) {
            const auto ts = io::read_signal_csv(fs::path(ecg_input));
            emit(out, to_json(heart_rate_from_ecg(ts)));
            return kExitOk;
        }
        if (*process_resp) {
            const auto ts = io::read_signal_csv(fs::path(resp_input));
            emit(out, to_json(respiration_rate(ts)));
            return kExitOk;
        }
        if (*ippg) {
            const auto frames = io::read_frame_archive(archive);
            const Roi roi = ippg_roi.empty() ? default_roi(frames.width(), frames.height()) : parse_roi(ippg_roi);
            const auto series = extract_ippg(frames, roi);

            std::optional<RateEstimate> hr;
            std::optional<RateEstimate> rr;
            json errors = json::array();
            int code = kExitOk;
            try {
                hr = hr_from_ippg(series);
            } catch (const Error& e) {
                errors.push_back(std::string("hr: ") + e.what());
                code = exit_code_for(e.kind());
            }
            try {
                rr = rr_from_ippg(series);
            } catch (const Error& e) {
                errors.push_back(std::string("rr: ") + e.what());
                code = std::max(code, exit_code_for(e.kind()));
            }
            json j{{"hr", rate_or_null(hr)},
                   {"rr", rate_or_null(rr)},
                   {"roi", to_json(roi)},
                   {"fps", frames.fps()},
                   {"frame_count", frames.frame_count()}};
            if (hr) j["hr_estimate"] = to_json(*hr);
            if (rr) j["rr_estimate"] = to_json(*rr);
            if (!errors.empty()) {
                j["errors"] = errors;
                for (const auto& e : errors) err << "error: " << e.get<std::string>() << '\n';
            }
            emit(out, j);
            return code;
        }
        if (*analyze) {
            if (study_path.empty() && embedded.empty()) {
                err << "error: analyze-study needs a study CSV path or --embedded hr|rr\n\n" << analyze->help();
                return kExitUsage;
            }
            const StudyTable table =
                !embedded.empty()
                    ? embedded_table(embedded == "hr" ? Measure::HeartRate : Measure::RespirationRate)
                    : io::read_study_csv(fs::path(study_path));
            const auto report = analyze_study(table);
            if (format == "table") {
                out << render_table(report);
            } else {
                emit(out, to_json(report));
            }
            return kExitOk;
        }
        if (*suggest) {
            ComfortContext ctx;
            ctx.activity = *activity_from_string(sa.activity);
            ctx.temperature_c = sa.temp;
            ctx.humidity_pct = sa.humidity;
            ctx.wear_duration_h = sa.wear_hours;

            ComfortReading reading;
            reading.hr_baseline = sa.hr_baseline;
            if (sa.hr) reading.hr = manual_estimate(*sa.hr);
            if (sa.rr) reading.rr = manual_estimate(*sa.rr);
            if (!sa.ecg_path.empty()) reading.hr = heart_rate_from_ecg(io::read_signal_csv(fs::path(sa.ecg_path)));
            if (!sa.resp_path.empty()) reading.rr = respiration_rate(io::read_signal_csv(fs::path(sa.resp_path)));
            if (!sa.frames_dir.empty()) {
                const auto frames = io::read_frame_archive(sa.frames_dir);
                const Roi roi = sa.roi.empty() ? default_roi(frames.width(), frames.height()) : parse_roi(sa.roi);
                const auto series = extract_ippg(frames, roi);
                reading.hr = hr_from_ippg(series);
                reading.rr = rr_from_ippg(series);
            }

            std::optional<double> emotion = sa.emotion;
            if (!sa.positive.empty() || !sa.negative.empty()) {
                EmotionResponse response;
                for (const auto& item : sa.positive) {
                    const auto p = positive_item_from_string(item);
                    if (!p) throw Error(ErrorKind::Parse, "unknown positive item: " + item);
                    response.positive_items.insert(*p);
                }
                for (const auto& item : sa.negative) {
                    const auto n = negative_item_from_string(item);
                    if (!n) throw Error(ErrorKind::Parse, "unknown negative item: " + item);
                    response.negative_items.insert(*n);
                }
                emotion = emotion_score(response);
            }

            const auto s = suggest_garment(reading, ctx, emotion);
            json j = to_json(s);
            j["inputs"] = json{{"activity", to_string(ctx.activity)},
                               {"temperature_c", ctx.temperature_c},
                               {"humidity_pct", ctx.humidity_pct},
                               {"wear_duration_h", ctx.wear_duration_h},
                               {"hr", reading.hr ? json(reading.hr->rate_per_min) : json(nullptr)},
                               {"rr", reading.rr ? json(reading.rr->rate_per_min) : json(nullptr)},
                               {"hr_baseline", reading.hr_baseline ? json(*reading.hr_baseline) : json(nullptr)},
                               {"emotion_score", emotion ? json(*emotion) : json(nullptr)}};
            emit(out, j);
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace comfort::cli
