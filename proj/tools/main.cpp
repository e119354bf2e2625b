// evalkit command-line front end: dataset/config ingestion, pipeline
// execution, and report emission. All numeric work lives in the library;
// this file only sequences it and maps errors to exit codes.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "evalkit/components.hpp"
#include "evalkit/config.hpp"
#include "evalkit/csv.hpp"
#include "evalkit/entropy.hpp"
#include "evalkit/errors.hpp"
#include "evalkit/matrix.hpp"
#include "evalkit/preprocess.hpp"
#include "evalkit/report.hpp"
#include "evalkit/scoring.hpp"
#include "evalkit/version.hpp"

namespace {

struct CommandOptions {
    std::string data;
    std::string config_path;
    std::string out;
    std::string format;  // empty: take the configured format
    std::optional<double> threshold;
    std::optional<std::size_t> retain;
};

std::string read_file_bytes(const std::string& path, const std::string& what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw evalkit::ValidationError(what + ": cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::string> indicator_names(const evalkit::JudgmentMatrix& x) {
    std::vector<std::string> names;
    names.reserve(x.indicators.size());
    for (const auto& spec : x.indicators) names.push_back(spec.name);
    return names;
}

int run_command(const std::string& command, const CommandOptions& opt) {
    using namespace evalkit;

    EvaluationConfig config =
        opt.config_path.empty() ? default_config() : load_config(opt.config_path);

    Provenance prov;
    if (!opt.config_path.empty()) {
        prov.config_digest = fnv1a64_digest(read_file_bytes(opt.config_path, "config"));
        prov.config_echo = config.echo;
    }
    const std::string data_bytes = read_file_bytes(opt.data, "dataset");
    prov.data_digest = fnv1a64_digest(data_bytes);
    const JudgmentMatrix x = to_judgment_matrix(parse_csv_dataset(data_bytes, opt.data), config);

    OutputFormat format = config.output_format;
    if (!opt.format.empty()) {
        format = opt.format == "csv" ? OutputFormat::csv : OutputFormat::json;
    }
    Retention retention = Retention::by_threshold(config.retention_threshold);
    if (opt.threshold) {
        if (!(*opt.threshold > 0.0 && *opt.threshold <= 1.0)) {
            throw ValidationError("--threshold must be in (0,1], got " +
                                  std::to_string(*opt.threshold));
        }
        retention = Retention::by_threshold(*opt.threshold);
    }
    if (opt.retain) retention = Retention::by_count(*opt.retain);

    std::string output;
    if (command == "evaluate") {
        const NormalizedMatrix r = minmax_normalize(x);
        const EntropyVector h = information_entropy(corrected_proportions(r));
        const WeightVector w = entropy_weights(h);
        const std::vector<double> raw_scores = weighted_total_score(r, w);

        std::vector<ScoreCard> cards(raw_scores.size());
        for (std::size_t i = 0; i < raw_scores.size(); ++i) {
            cards[i].object = x.objects[i];
            cards[i].raw_score = raw_scores[i];
            cards[i].scaled_score = raw_scores[i] * 100.0;
            cards[i].grade = assign_grade(cards[i].scaled_score, config.grade_scale);
        }
        cards = rank_objects(std::move(cards));

        const ComponentSummary summary = summarize_components(x, retention, config.rotation);
        output = format == OutputFormat::json
                     ? serialize_report(build_evaluate_report(x, h, w, cards, config.grade_scale,
                                                              config.grade_scale_name, summary,
                                                              prov))
                     : render_scores_csv(cards);
    } else if (command == "weights") {
        const NormalizedMatrix r = minmax_normalize(x);
        const EntropyVector h = information_entropy(corrected_proportions(r));
        const WeightVector w = entropy_weights(h);
        output = format == OutputFormat::json
                     ? serialize_report(build_weights_report(x.indicators, h, w, prov))
                     : render_weights_csv(x.indicators, h, w);
    } else if (command == "normalize") {
        const NormalizedMatrix r = minmax_normalize(x);
        output = format == OutputFormat::json
                     ? serialize_report(build_normalize_report(r, prov))
                     : render_csv_dataset(r.objects, indicator_names(x), r.values);
    } else {  // pca | factor
        const StandardizedMatrix zx = zscore_standardize(x);
        const ComponentModel model = fit_pca(zx, retention);
        Matrix scores = component_scores(zx, model.eigvec_basis);
        std::optional<RotationResult> rotation;
        std::vector<double> shares = model.retained_shares();
        if (command == "factor") {
            rotation = varimax_rotate(model.loadings);
            scores = matmul(scores, rotation->rotation);  // factor scores on the rotated basis
            shares = rotation->rotated_variance_shares;
        }
        const CompositeScores composite = composite_scores(scores, shares);
        output = format == OutputFormat::json
                     ? serialize_report(build_components_report(command, indicator_names(x),
                                                                x.objects, model, rotation,
                                                                scores, composite, prov))
                     : render_scree_csv(model);
    }

    if (opt.out.empty()) {
        std::cout << output;
    } else {
        write_text_atomic(opt.out, output);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropy-weighted composite-index evaluation", evalkit::kToolName};
    app.require_subcommand(1);
    app.set_version_flag("--version",
                         std::string(evalkit::kToolName) + " " + evalkit::kToolVersion);

    CommandOptions opt;
    double threshold_flag = 0.0;
    std::size_t retain_flag = 0;

    const auto add_common = [&opt](CLI::App* cmd) {
        cmd->add_option("--data", opt.data, "dataset CSV (header row, object label column first)")
            ->required();
        cmd->add_option("--config", opt.config_path, "evaluation config JSON");
        cmd->add_option("--out", opt.out, "output file (stdout when absent)");
        cmd->add_option("--format", opt.format, "output format (default json)")
            ->check(CLI::IsMember({"json", "csv"}));
    };
    const auto add_retention = [&](CLI::App* cmd) {
        auto* threshold = cmd->add_option("--threshold", threshold_flag,
                                          "retention threshold on cumulative explained variance");
        auto* retain = cmd->add_option("--retain", retain_flag, "retained component count");
        threshold->excludes(retain);
        retain->excludes(threshold);
    };

    CLI::App* evaluate =
        app.add_subcommand("evaluate", "weights, scores, grades, ranks, component summary");
    CLI::App* weights = app.add_subcommand("weights", "entropy weight table only");
    CLI::App* normalize = app.add_subcommand("normalize", "min-max normalized matrix only");
    CLI::App* pca = app.add_subcommand("pca", "principal components and scree data");
    CLI::App* factor = app.add_subcommand("factor", "varimax-rotated components and scree data");
    for (CLI::App* cmd : {evaluate, weights, normalize, pca, factor}) add_common(cmd);
    for (CLI::App* cmd : {pca, factor}) add_retention(cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage problems are validation errors
    }

    CLI::App* chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();
    if (command == "pca" || command == "factor") {
        if (chosen->count("--threshold") > 0) opt.threshold = threshold_flag;
        if (chosen->count("--retain") > 0) opt.retain = retain_flag;
    }

    try {
        return run_command(command, opt);
    } catch (const evalkit::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const evalkit::NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
