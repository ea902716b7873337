#include <lanekit/cli.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <lanekit/annotate.hpp>
#include <lanekit/config.hpp>
#include <lanekit/edges.hpp>
#include <lanekit/imaging.hpp>
#include <lanekit/lane.hpp>
#include <lanekit/netpbm.hpp>
#include <lanekit/record.hpp>
#include <lanekit/sim.hpp>

namespace fs = std::filesystem;

namespace lanekit {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;

AppConfig build_config(const std::string& config_path,
                       const std::vector<std::string>& sets) {
    AppConfig cfg;
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    for (const std::string& kv : sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--set expects key=value, got '" + kv + "'");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            if (b == std::string::npos) return std::string();
            const auto e = s.find_last_not_of(" \t");
            return s.substr(b, e - b + 1);
        };
        apply_config_kv(cfg, trim(kv.substr(0, eq)), trim(kv.substr(eq + 1)));
    }
    return cfg;
}

ImageBuffer load_frame(const std::string& path) {
    return read_ppm(read_file(path));
}

ImageBuffer masked_gray(const ImageBuffer& frame, const LaneConfig& cfg) {
    ImageBuffer gray = to_grayscale(frame);
    if (cfg.mask_mode == MaskMode::Off) return gray;
    const ImageBuffer mask =
        hsv_threshold(rgb_to_hsv(frame), cfg.mask_hue_lo, cfg.mask_hue_hi,
                      cfg.mask_sat_lo, cfg.mask_sat_hi, cfg.mask_val_lo,
                      cfg.mask_val_hi);
    for (std::size_t i = 0; i < gray.data.size(); ++i) {
        if (cfg.mask_mode == MaskMode::And)
            gray.data[i] = mask.data[i] ? gray.data[i] : 0;
        else
            gray.data[i] = std::max(gray.data[i], mask.data[i]);
    }
    return gray;
}

int run_detect(const std::string& input, const std::string& out_path,
               const std::string& json_path, const AppConfig& cfg) {
    const ImageBuffer frame = load_frame(input);
    const LaneEstimate est = detect_lane(frame, cfg.lane, std::nullopt);
    if (!out_path.empty()) write_file(out_path, write_ppm(annotate(frame, est)));
    if (!json_path.empty()) write_text_file(json_path, lane_record_line(0, est) + "\n");
    return kExitOk;
}

int run_stages(const std::string& input, const std::string& outdir,
               const AppConfig& cfg) {
    const ImageBuffer frame = load_frame(input);
    fs::create_directories(outdir);

    const HsvImage hsv = rgb_to_hsv(frame);
    ImageBuffer value = ImageBuffer::create(frame.width, frame.height, 1);
    for (std::size_t i = 0; i < value.data.size(); ++i)
        value.data[i] = quantize_u8(hsv.val[i] * 255.0);

    const ImageBuffer gray = masked_gray(frame, cfg.lane);
    const ImageBuffer blur = gaussian_blur(gray, cfg.lane.blur_sigma, cfg.lane.blur_ksize);
    const ImageBuffer edge_map = canny(gray, cfg.lane.canny_low, cfg.lane.canny_high,
                                       cfg.lane.blur_sigma, cfg.lane.blur_ksize);

    const fs::path dir(outdir);
    write_file((dir / "hsv_value.pgm").string(), write_pgm(value));
    write_file((dir / "gray.pgm").string(), write_pgm(gray));
    write_file((dir / "blur.pgm").string(), write_pgm(blur));
    write_file((dir / "canny.pgm").string(), write_pgm(edge_map));
    return kExitOk;
}

int run_batch(const std::string& framedir, const std::string& outdir,
              const AppConfig& cfg) {
    if (!fs::is_directory(framedir))
        throw IoError("not a directory: " + framedir);

    // frame_NNNNNN.ppm, ascending index.
    std::vector<std::pair<long, fs::path>> frames;
    for (const auto& entry : fs::directory_iterator(framedir)) {
        if (!entry.is_regular_file()) continue;
        const std::string name = entry.path().filename().string();
        if (name.size() != 16 || name.rfind("frame_", 0) != 0 ||
            name.substr(12) != ".ppm")
            continue;
        const std::string digits = name.substr(6, 6);
        if (!std::all_of(digits.begin(), digits.end(),
                         [](unsigned char c) { return std::isdigit(c); }))
            continue;
        frames.emplace_back(std::stol(digits), entry.path());
    }
    std::sort(frames.begin(), frames.end());

    fs::create_directories(outdir);
    std::string records;
    std::optional<LaneEstimate> prev;
    for (const auto& [index, path] : frames) {
        const ImageBuffer frame = load_frame(path.string());
        const LaneEstimate est = detect_lane(frame, cfg.lane, prev);
        write_file((fs::path(outdir) / path.filename()).string(),
                   write_ppm(annotate(frame, est)));
        records += lane_record_line(static_cast<int>(index), est) + "\n";
        prev = est;
    }
    write_text_file((fs::path(outdir) / "records.jsonl").string(), records);
    return kExitOk;
}

int run_simulate(const std::string& report_path, const AppConfig& cfg) {
    std::optional<LogActuator> log;
    if (!cfg.actuator_log.empty()) log.emplace(cfg.actuator_log);

    const RunReport report =
        run_closed_loop(cfg.road(), cfg.camera, cfg.lane, cfg.control, cfg.sim,
                        cfg.initial_state(), log ? &*log : nullptr);

    std::string text;
    for (const auto& step : report.steps) text += run_step_line(step) + "\n";
    text += run_summary_line(report) + "\n";
    write_text_file(report_path, text);
    return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Lane detection and lane-following pipeline"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> sets;
    app.add_option("--config", config_path, "Config file (key = value lines)");
    app.add_option("--set", sets, "Override one config key (key=value), repeatable");

    std::string in_path, out_path, json_path, outdir, framedir, report_path;

    CLI::App* detect = app.add_subcommand("detect", "Detect lanes in one PPM frame");
    detect->add_option("input", in_path, "Input PPM file")->required();
    detect->add_option("--out", out_path, "Annotated output PPM");
    detect->add_option("--json", json_path, "Lane record output file");

    CLI::App* stages = app.add_subcommand("stages", "Dump pipeline stage images");
    stages->add_option("input", in_path, "Input PPM file")->required();
    stages->add_option("--outdir", outdir, "Output directory")->required();

    CLI::App* run = app.add_subcommand("run", "Process a directory of frames");
    run->add_option("framedir", framedir, "Directory of frame_NNNNNN.ppm")->required();
    run->add_option("--out", outdir, "Output directory")->required();

    CLI::App* simulate = app.add_subcommand("simulate", "Run the closed-loop simulator");
    simulate->add_option("--report", report_path, "Report output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        const AppConfig cfg = build_config(config_path, sets);
        if (detect->parsed()) return run_detect(in_path, out_path, json_path, cfg);
        if (stages->parsed()) return run_stages(in_path, outdir, cfg);
        if (run->parsed()) return run_batch(framedir, outdir, cfg);
        if (simulate->parsed()) return run_simulate(report_path, cfg);
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

}  // namespace lanekit
