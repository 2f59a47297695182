// Copyright 2026 The randomnode Authors.
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

#include "randomnode/text_index.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <locale>
#include <optional>
#include <ostream>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "json.hpp"

namespace randomnode {
namespace {

const std::ctype<wchar_t>& WideCType() {
  static const std::locale* const locale = [] {
    try {
      return new std::locale("C.UTF-8");
    } catch (const std::runtime_error&) {
      return new std::locale(std::locale::classic());
    }
  }();
  return std::use_facet<std::ctype<wchar_t>>(*locale);
}

// Decodes one UTF-8 sequence at text[pos]; advances pos. Returns nullopt for
// malformed input (pos still advances by at least one byte).
std::optional<char32_t> DecodeUtf8(std::string_view text, std::size_t& pos) {
  const auto lead = static_cast<unsigned char>(text[pos++]);
  if (lead < 0x80) return lead;
  int extra;
  char32_t cp;
  if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
  } else {
    return std::nullopt;
  }
  for (int i = 0; i < extra; ++i) {
    if (pos >= text.size()) return std::nullopt;
    const auto cont = static_cast<unsigned char>(text[pos]);
    if ((cont & 0xC0) != 0x80) return std::nullopt;
    cp = (cp << 6) | (cont & 0x3F);
    ++pos;
  }
  static constexpr char32_t kMin[] = {0, 0x80, 0x800, 0x10000};
  if (cp < kMin[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return std::nullopt;
  }
  return cp;
}

void AppendUtf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

}  // namespace

std::vector<std::string> Tokenize(std::string_view text) {
  const auto& ctype = WideCType();
  std::vector<std::string> terms;
  std::string current;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::optional<char32_t> cp = DecodeUtf8(text, pos);
    const auto wc = cp ? static_cast<wchar_t>(*cp) : L' ';
    if (cp && ctype.is(std::ctype_base::alnum, wc)) {
      AppendUtf8(static_cast<char32_t>(ctype.tolower(wc)), current);
    } else if (!current.empty()) {
      terms.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) terms.push_back(std::move(current));
  return terms;
}

absl::StatusOr<InvertedIndex> InvertedIndex::Build(
    std::span<const Document> docs) {
  std::vector<const Document*> ordered;
  ordered.reserve(docs.size());
  for (const Document& d : docs) ordered.push_back(&d);
  std::sort(ordered.begin(), ordered.end(),
            [](const Document* a, const Document* b) { return a->id < b->id; });
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    if (ordered[i]->id == ordered[i - 1]->id) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate document id ", ordered[i]->id));
    }
  }

  InvertedIndex index;
  index.doc_count_ = docs.size();
  for (const Document* d : ordered) {
    std::vector<std::string> terms = Tokenize(d->text);
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    for (std::string& t : terms) index.postings_[std::move(t)].push_back(d->id);
  }
  return index;
}

std::span<const NodeId> InvertedIndex::Postings(std::string_view term) const {
  auto it = postings_.find(absl::string_view(term.data(), term.size()));
  if (it == postings_.end()) return {};
  return it->second;
}

std::vector<std::pair<std::string, std::size_t>>
InvertedIndex::TermsByFrequency(std::size_t limit) const {
  std::vector<std::pair<std::string, std::size_t>> terms;
  terms.reserve(postings_.size());
  for (const auto& [term, list] : postings_) terms.emplace_back(term, list.size());
  auto order = [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  };
  const std::size_t keep = std::min(limit, terms.size());
  std::partial_sort(terms.begin(), terms.begin() + keep, terms.end(), order);
  terms.resize(keep);
  return terms;
}

std::vector<NodeId> MatchQuery(const InvertedIndex& index,
                               std::string_view query) {
  std::vector<std::string> terms = Tokenize(query);
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  if (terms.empty()) return {};

  std::vector<std::span<const NodeId>> lists;
  for (const std::string& t : terms) lists.push_back(index.Postings(t));
  std::sort(lists.begin(), lists.end(),
            [](auto a, auto b) { return a.size() < b.size(); });

  std::vector<NodeId> result(lists[0].begin(), lists[0].end());
  std::vector<NodeId> scratch;
  for (std::size_t i = 1; i < lists.size() && !result.empty(); ++i) {
    scratch.clear();
    std::set_intersection(result.begin(), result.end(), lists[i].begin(),
                          lists[i].end(), std::back_inserter(scratch));
    result.swap(scratch);
  }
  return result;
}

absl::StatusOr<std::vector<Document>> LoadCorpus(std::istream& in) {
  std::vector<Document> docs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto record = nlohmann::json::parse(line);
      const auto id = record.at("id").get<std::int64_t>();
      if (id < 0 || id > static_cast<std::int64_t>(UINT32_MAX)) {
        return absl::InvalidArgumentError(
            absl::StrCat("line ", line_no, ": id ", id, " out of range"));
      }
      docs.push_back({static_cast<NodeId>(id),
                      record.at("url").get<std::string>(),
                      record.at("text").get<std::string>()});
    } catch (const nlohmann::json::exception& e) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": ", e.what()));
    }
  }
  return docs;
}

absl::StatusOr<std::vector<Document>> LoadCorpusFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  auto docs = LoadCorpus(in);
  if (!docs.ok()) {
    return absl::Status(docs.status().code(),
                        absl::StrCat(path, ": ", docs.status().message()));
  }
  return docs;
}

void WriteCorpus(std::span<const Document> docs, std::ostream& out) {
  for (const Document& d : docs) {
    nlohmann::ordered_json record;
    record["id"] = d.id;
    record["url"] = d.url;
    record["text"] = d.text;
    out << record.dump(-1, ' ', false,
                       nlohmann::json::error_handler_t::replace)
        << '\n';
  }
}

}  // namespace randomnode
