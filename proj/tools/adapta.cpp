#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "adapta/adaptation.hpp"
#include "adapta/analytics.hpp"
#include "adapta/codec.hpp"
#include "adapta/evaluation_data.hpp"
#include "adapta/gesture.hpp"
#include "adapta/replay.hpp"
#ifdef ADAPTA_WITH_SERVER
#include "adapta/server.hpp"
#endif
#include "adapta/store.hpp"
#include "adapta/ueq.hpp"

namespace {

using namespace adapta;

struct Fail : Error {
    using Error::Error;
};

template <typename T, typename Parse>
T parseOrFail(const std::string& text, Parse parse, const std::string& what) {
    const auto value = parse(text);
    if (!value) throw Fail("unknown " + what + " '" + text + "'");
    return *value;
}

void requireData(const std::string& dir) {
    if (dir.empty()) throw Fail("no data directory: pass --data DIR or set ADAPTA_DATA");
}

std::string profilesTable(const std::vector<ProfileRecord>& records) {
    std::ostringstream out;
    out << std::left << std::setw(14) << "id" << std::setw(22) << "name" << std::setw(5) << "age" << std::setw(7) << "sex"
        << std::setw(12) << "disability" << std::setw(22) << "laterality" << std::setw(10) << "posture" << std::setw(12)
        << "arms" << std::setw(7) << "depth" << "rgb\n";
    for (const auto& r : records) {
        const auto& p = r.profile;
        const auto& d = r.device;
        std::ostringstream depth;
        depth << d.depthDistance;
        out << std::left << std::setw(14) << p.id << std::setw(22) << p.fullName << std::setw(5) << p.age << std::setw(7)
            << toString(p.sex) << std::setw(12) << toString(p.disability) << std::setw(22) << toString(p.laterality)
            << std::setw(10) << toString(d.posture) << std::setw(12) << toString(d.armMobility) << std::setw(7)
            << depth.str() << (d.rgbCameraActive ? "on" : "off") << '\n';
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adaptive motion-based learning activities"};
    app.require_subcommand(1);

    std::string dataDir;
    const auto addData = [&](CLI::App* cmd) {
        cmd->add_option("--data", dataDir, "Store directory")->envname("ADAPTA_DATA");
    };
    std::string format = "text";
    const auto addFormat = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* rules = app.add_subcommand("rules", "Adaptation rule base");
    rules->require_subcommand(1);
    auto* rulesDump = rules->add_subcommand("dump", "Print the rule table");

    auto* gestures = app.add_subcommand("gestures", "Gesture definitions");
    gestures->require_subcommand(1);
    auto* gesturesDescribe = gestures->add_subcommand("describe", "Print gesture states and thresholds");

    auto* profiles = app.add_subcommand("profiles", "Student profiles");
    profiles->require_subcommand(1);
    auto* profilesAdd = profiles->add_subcommand("add", "Register a profile and its device model");
    auto* profilesList = profiles->add_subcommand("list", "List profiles");
    addData(profilesAdd);
    addData(profilesList);
    addFormat(profilesList);
    std::string pid, pname, psex = "Other", plat = "None", pdis, pposture = "Standing", parm = "both-right";
    int page = 0;
    double pdepth = 2.0;
    bool prgb = false;
    profilesAdd->add_option("--id", pid, "Profile id")->required();
    profilesAdd->add_option("--name", pname, "Full name")->required();
    profilesAdd->add_option("--age", page, "Age in years")->required();
    profilesAdd->add_option("--sex", psex, "F, M or Other");
    profilesAdd->add_option("--laterality", plat, "None, CannotRecognizeLeft or CannotRecognizeRight");
    profilesAdd->add_option("--disability", pdis, "Visual, Hearing, Physical or Autism")->required();
    profilesAdd->add_option("--posture", pposture, "Standing or Seated");
    profilesAdd->add_option("--arms", parm, "both-left, both-right, left-only or right-only");
    profilesAdd->add_option("--depth", pdepth, "Distance to the sensor in metres");
    profilesAdd->add_flag("--rgb", prgb, "Show the RGB camera mirror");

    auto* replay = app.add_subcommand("replay", "Run an activity over a recorded skeleton trace");
    addData(replay);
    std::string rprofile, ractivity, rtrace;
    ReplayOptions ropts;
    bool dryRun = false;
    replay->add_option("--profile", rprofile, "Profile id")->required();
    replay->add_option("--activity", ractivity, "concept:animals|concept:vehicles|laterality:left|laterality:right")
        ->required();
    replay->add_option("--trace", rtrace, "Trace file")->required();
    replay->add_option("--iteration", ropts.iteration, "Study iteration")->check(CLI::Range(1, 2));
    replay->add_option("--session", ropts.sessionIndex, "Session within the iteration")->check(CLI::Range(1, 3));
    replay->add_flag("--dry-run", dryRun, "Print the log without appending it");

    auto* stats = app.add_subcommand("stats", "Session statistics");
    addData(stats);
    addFormat(stats);
    std::string report;
    int iteration = 1;
    bool published = false;
    stats->add_option("--report", report, "table4, timeseries or errors")
        ->required()
        ->check(CLI::IsMember({"table4", "timeseries", "errors"}));
    stats->add_option("--iteration", iteration, "Study iteration")->check(CLI::Range(1, 2));
    stats->add_flag("--published", published, "Use the evaluation data embedded in the program");

    auto* ueq = app.add_subcommand("ueq", "User Experience Questionnaire analysis");
    addFormat(ueq);
    std::string ueqInput;
    bool benchmark = false, boxplot = false;
    ueq->add_option("--input", ueqInput, "Answer table (CSV/TSV)")->required();
    ueq->add_flag("--benchmark", benchmark, "Classify scale means against the benchmark");
    ueq->add_flag("--boxplot", boxplot, "Per-participant five-number summaries");

    auto* serve = app.add_subcommand("serve", "Serve the session websocket and profile endpoints");
    addData(serve);
    int port = 8080;
    std::string address = "0.0.0.0", staticDir;
    serve->add_option("--port", port, "TCP port")->check(CLI::Range(0, 65535));
    serve->add_option("--address", address, "Listen address");
    serve->add_option("--static", staticDir, "Directory of UI assets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "adapta: " << e.what() << '\n';
        return e.get_exit_code();
    }

    try {
        if (rulesDump->parsed()) {
            std::cout << formatRuleTable();
        } else if (gesturesDescribe->parsed()) {
            std::cout << describeGestures(defaultGestures());
        } else if (profilesAdd->parsed()) {
            requireData(dataDir);
            ProfileRecord r;
            r.profile = {pid, pname, page, parseOrFail<Sex>(psex, parseSex, "sex"),
                         parseOrFail<LateralityProblem>(plat, parseLaterality, "laterality"),
                         parseOrFail<Disability>(pdis, parseDisability, "disability")};
            r.device = {parseOrFail<Posture>(pposture, parsePosture, "posture"), prgb, pdepth,
                        parseOrFail<ArmMobility>(parm, parseArmMobility, "arm mobility")};
            auto store = DataStore::open(dataDir);
            store.addProfile(r);
            const auto depth = validateDepthDistance(r.device);
            if (!depth.within()) {
                std::cerr << "adapta: warning: depth " << depth.measured << " m is outside the recommended "
                          << kRecommendedDepthMin << "-" << kRecommendedDepthMax << " m\n";
            }
            std::cout << "added " << pid << '\n';
        } else if (profilesList->parsed()) {
            requireData(dataDir);
            const auto records = DataStore::open(dataDir).profiles();
            std::cout << (format == "json" ? encodeProfiles(records) : profilesTable(records));
        } else if (replay->parsed()) {
            requireData(dataDir);
            const auto spec = parseActivity(ractivity);
            if (!spec) throw Fail("unknown activity '" + ractivity + "'");
            auto store = DataStore::open(dataDir);
            const auto log = runReplay(store, rprofile, *spec, rtrace, ropts);
            if (!dryRun) store.appendSession(log);
            std::cout << encodeSessionLog(log) << '\n';
        } else if (stats->parsed()) {
            std::vector<SessionLog> logs;
            if (published) {
                logs = evaluation::publishedLogs();
            } else {
                requireData(dataDir);
                logs = DataStore::open(dataDir).sessions();
            }
            const bool json = format == "json";
            if (report == "table4") {
                const auto rows = userTimeStats(logs, iteration);
                std::cout << (json ? table4Json(rows) + "\n" : formatTable4(rows));
            } else if (report == "timeseries") {
                const auto curves = groupRepetitionMeans(logs, iteration);
                std::cout << (json ? timeSeriesJson(curves, iteration) + "\n" : formatTimeSeries(curves, iteration));
            } else {
                const auto means = groupErrorMeans(logs, iteration);
                std::cout << (json ? errorMeansJson(means, iteration) + "\n" : formatErrorMeans(means, iteration));
            }
        } else if (ueq->parsed()) {
            std::ifstream in(ueqInput);
            if (!in) throw Fail("cannot read " + ueqInput);
            const auto result = aggregateScales(parseUeqTable(in));
            std::cout << (format == "json" ? scaleReportJson(result) + "\n" : formatScaleReport(result, benchmark, boxplot));
        } else if (serve->parsed()) {
#ifdef ADAPTA_WITH_SERVER
            requireData(dataDir);
            ServerOptions options;
            options.address = address;
            options.port = static_cast<unsigned short>(port);
            if (!staticDir.empty()) options.staticDir = staticDir;
            Server server(DataStore::open(dataDir), options);
            std::cerr << "adapta: listening on " << address << ':' << server.port() << '\n';
            server.run();
#else
            throw Fail("this build has no server; reconfigure with ADAPTA_BUILD_SERVER=ON");
#endif
        }
    } catch (const std::exception& e) {
        std::string message = e.what();
        for (auto& c : message) {
            if (c == '\n') c = ' ';
        }
        std::cerr << "adapta: error: " << message << '\n';
        return 1;
    }
    return 0;
}
