// Copyright 2026 The linkeval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fixtures.h"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace linkeval::testing {

namespace {

struct Mention {
  std::vector<std::string> tokens;
  std::string entity;  // gold
};

void AddSentence(std::ostringstream &out, std::mt19937 &rng,
                 const std::vector<Mention> &mentions,
                 const std::vector<std::string> &filler, std::size_t slots) {
  for (std::size_t slot = 0; slot < slots; ++slot) {
    const std::size_t words = 1 + rng() % 3;
    for (std::size_t w = 0; w < words; ++w) {
      out << filler[rng() % filler.size()] << " O\n";
    }
    const Mention &m = mentions[rng() % mentions.size()];
    for (std::size_t t = 0; t < m.tokens.size(); ++t) {
      out << m.tokens[t] << (t == 0 ? " B " : " I ") << m.entity << "\n";
    }
  }
  out << ". O\n\n";
}

}  // namespace

std::shared_ptr<const AliasDictionary> Fixture::dictionary() const {
  std::istringstream in(dictionary_tsv);
  return std::make_shared<const AliasDictionary>(LoadAliasDictionary(in));
}

std::string JapanDictionaryTsv() {
  return "Japan\tJAPAN_NT\t0.6\nJapan\tJAPAN\t0.4\n";
}

Fixture AmbiguousFixture(unsigned seed, std::size_t documents) {
  Fixture fixture;
  fixture.dictionary_tsv =
      "# surface\tentity\tprior\n"
      "Japan\tJAPAN_NT\t0.6\nJapan\tJAPAN\t0.4\n"
      "Germany\tGERMANY_NT\t0.55\nGermany\tGERMANY\t0.45\n"
      "Italy\tITALY_NT\t0.7\nItaly\tITALY\t0.3\n"
      "Paris\tPARIS\t0.8\nParis\tPARIS_TX\t0.2\n"
      "Lincoln\tLINCOLN_NE\t0.5\nLincoln\tABRAHAM_LINCOLN\t0.5\n"
      "Jordan\tMICHAEL_JORDAN\t0.65\nJordan\tJORDAN\t0.35\n";
  const std::vector<Mention> mentions = {
      {{"Japan"}, "JAPAN_NT"},   {{"Germany"}, "GERMANY_NT"},
      {{"Italy"}, "ITALY_NT"},   {{"Paris"}, "PARIS"},
      {{"Lincoln"}, "ABRAHAM_LINCOLN"}, {{"Jordan"}, "MICHAEL_JORDAN"},
  };
  const std::vector<std::string> filler = {"beat", "drew", "with", "on",
                                           "Sunday", "after", "the", "match",
                                           "in", "visited", "met", ","};
  std::mt19937 rng(seed);
  std::ostringstream out;
  for (std::size_t d = 0; d < documents; ++d) {
    out << "-DOCSTART- (amb" << d << ")\n";
    const std::size_t sentences = 1 + rng() % 3;
    for (std::size_t s = 0; s < sentences; ++s) {
      AddSentence(out, rng, mentions, filler, 1 + rng() % 3);
    }
  }
  fixture.conll = out.str();
  return fixture;
}

Fixture PerfectionFixture(unsigned seed, std::size_t documents) {
  Fixture fixture;
  fixture.dictionary_tsv =
      "New York\tNEW_YORK_CITY\t1.0\n"
      "York\tYORK\t1.0\n"
      "Tokyo\tTOKYO\t1.0\n"
      "Angela Merkel\tANGELA_MERKEL\t1.0\n"
      "United Nations\tUNITED_NATIONS\t1.0\n"
      "S\xC3\xA3o Paulo\tSAO_PAULO\t1.0\n"
      "Z\xC3\xBCrich\tZURICH\t1.0\n";
  const std::vector<Mention> mentions = {
      {{"New", "York"}, "NEW_YORK_CITY"},
      {{"York"}, "YORK"},
      {{"Tokyo"}, "TOKYO"},
      {{"Angela", "Merkel"}, "ANGELA_MERKEL"},
      {{"United", "Nations"}, "UNITED_NATIONS"},
      {{"S\xC3\xA3o", "Paulo"}, "SAO_PAULO"},
      {{"Z\xC3\xBCrich"}, "ZURICH"},
  };
  const std::vector<std::string> filler = {"officials", "said", "in", "on",
                                           "Monday", "talks", "with", "the",
                                           "visit", "to", "from", ","};
  std::mt19937 rng(seed);
  std::ostringstream out;
  for (std::size_t d = 0; d < documents; ++d) {
    out << "-DOCSTART- (perf" << d << ")\n";
    // The first document is long enough to need several segments.
    const std::size_t sentences = d == 0 ? 150 : 1 + rng() % 4;
    for (std::size_t s = 0; s < sentences; ++s) {
      AddSentence(out, rng, mentions, filler, 1 + rng() % 2);
    }
  }
  fixture.conll = out.str();
  return fixture;
}

std::string VocabularyFile(std::size_t count_including_none) {
  std::ostringstream out;
  char id[32];
  for (std::size_t i = 0; i + 1 < count_including_none; ++i) {
    std::snprintf(id, sizeof(id), "E%05zu", i);
    out << id << "\n";
  }
  out << kNoneEntity << "\n";
  return out.str();
}

std::filesystem::path TempDir(const std::string &tag) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("linkeval-" + tag + "-" + std::to_string(std::random_device{}()));
  std::filesystem::create_directories(dir);
  return dir;
}

void WriteText(const std::filesystem::path &path, const std::string &content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path.string());
  file << content;
}

}  // namespace linkeval::testing
