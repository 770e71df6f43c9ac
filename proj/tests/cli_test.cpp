#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "sandhi/cli.hpp"

using namespace sandhi;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<const char*> args) {
  args.insert(args.begin(), "sandhi");
  std::ostringstream out, err;
  int code = run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("join") {
  auto r = call({"join", "deva", "ālaya"});
  CHECK(r.code == 0);
  CHECK(r.out == "devālaya\n");
  auto g = call({"join", "rāmaḥ", "pacati"});
  CHECK(g.out == "rāmaΥ pacati\nrāmaΥpacati\nrāmaḥ pacati\nrāmaḥpacati\n");
}

TEST_CASE("join input errors") {
  auto r = call({"join", "", "x"});
  CHECK(r.code == 1);
  CHECK(r.err.find("empty word") != std::string::npos);
  auto q = call({"join", "deqa", "a"});
  CHECK(q.code == 1);
  CHECK(q.err.find("position 2") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"join", "deva"}).code == 2);
  CHECK(call({"--script", "latin", "join", "a", "b"}).code == 2);
}

TEST_CASE("rules") {
  auto r = call({"rules"});
  CHECK(r.code == 0);
  CHECK(r.out.find("7  6.1.101  savarṇadīrgha  obligatory\n") != std::string::npos);
  CHECK(r.out.find("43  8.3.37  -  optional\n") != std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 66);
}

TEST_CASE("join in devanagari") {
  auto r = call({"--script", "devanagari", "join", "देव", "आलय"});
  CHECK(r.code == 0);
  CHECK(r.out == "देवालय\n");
}

TEST_CASE("forms output is sorted and stable") {
  auto a = call({"forms", "tat"});
  auto b = call({"forms", "tat"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream in(a.out);
  std::string line, prev;
  while (std::getline(in, line)) {
    auto key = line.substr(0, line.find('\t'));
    CHECK(prev <= key);
    prev = key;
  }
  CHECK(a.out.find("tad\tright-context") != std::string::npos);
}

TEST_CASE("forms records") {
  auto r = call({"--output", "records", "forms", "tat"});
  CHECK(r.code == 0);
  CHECK(r.out.find("{\"context\":") != std::string::npos);
}

TEST_CASE("search a file and stdin-equivalent devanagari") {
  const char* path = "cli_test_corpus.txt";
  {
    std::ofstream f(path);
    f << "tasmād asamṛddhir bhavati\n";
  }
  auto r = call({"search", "asamṛddhiḥ", path});
  CHECK(r.code == 0);
  CHECK(r.out == "1:7\tasamṛddhir\tright-context\n");
  auto j = call({"--output", "records", "search", "asamṛddhiḥ", path});
  CHECK(j.out == "{\"kind\":\"right-context\",\"length\":10,\"line\":1,\"offset\":7,\"surface\":\"asamṛddhir\"}\n");
  {
    std::ofstream f(path);
    f << "तस्माद् असमृद्धिर् भवति\n";
  }
  auto d = call({"--script", "devanagari", "search", "असमृद्धिः", path});
  CHECK(d.code == 0);
  CHECK(d.out == "1:7\tasamṛddhir\tright-context\n");
  std::remove(path);
  CHECK(call({"search", "rāma", "/nonexistent/file"}).code == 1);
}
