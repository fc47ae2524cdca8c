#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "ingest.hpp"
#include "index.hpp"

namespace lexkb {

// A loaded knowledge base with its word lists and index.
struct Engine {
    std::shared_ptr<const KnowledgeBase> kb;
    std::shared_ptr<const Resources> resources;
    Index index;
    std::vector<std::string> warnings;

    Engine(IngestResult ingested, Resources res, IndexOptions opt = {})
        : kb(std::make_shared<const KnowledgeBase>(std::move(ingested.kb))),
          resources(std::make_shared<const Resources>(std::move(res))),
          index(kb, resources, opt),
          warnings(std::move(ingested.warnings)) {}

    static Engine load(const std::filesystem::path& corpus, const std::filesystem::path& data_dir,
                       IngestOptions ingest = {}, IndexOptions opt = {}) {
        return Engine(parse_corpus_file(corpus.string(), ingest), Resources::load(data_dir), opt);
    }

    static Engine from_text(const std::string& corpus, const std::filesystem::path& data_dir, IndexOptions opt = {}) {
        return Engine(parse_corpus_string(corpus), Resources::load(data_dir), opt);
    }
};

} // namespace lexkb
