#include <doctest.h>

#include <string>

#include "larag/generate.hpp"
#include "larag/prompt.hpp"

using namespace larag;

namespace {

RetrievedContext two_block_context() {
    RetrievedContext ctx;
    Chunk a;
    a.id = "u:a-0";
    a.text =
        "The connection manager stores database endpoints. Credentials belong in the vault. "
        "Each connection has a test button.";
    Chunk b;
    b.id = "u:b-0";
    b.text =
        "Dashboards are grids of widgets. Widgets bind to dataflow outputs. Filters compose "
        "across the whole dashboard. A fourth sentence should never be extracted.";
    ctx.seeds.push_back({a, 0.9});
    ctx.seeds.push_back({b, 0.8});
    ctx.final_ids = {"u:a-0", "u:b-0"};
    return ctx;
}

}  // namespace

TEST_CASE("count_tokens is ceil(bytes over four)") {
    CHECK(count_tokens("") == 0);
    CHECK(count_tokens("12345678") == 2);
    CHECK(count_tokens("123456789") == 3);
    CHECK(count_tokens("1") == 1);
}

TEST_CASE("the mock generator is a pure function of the prompt") {
    MockGenerator generator;
    const std::string prompt =
        render_prompt(PromptKind::kBasic, two_block_context(), "How do dashboards work?");
    const auto once = generator.generate(prompt);
    const auto twice = generator.generate(prompt);
    CHECK(once.answer == twice.answer);
    CHECK(once.total_tokens == twice.total_tokens);
    CHECK(once.latency_seconds == twice.latency_seconds);
    CHECK(generator.deterministic());
}

TEST_CASE("the mock extracts three sentences from the best-matching block") {
    MockGenerator generator;
    const auto result = generator.generate(render_prompt(
        PromptKind::kBasic, two_block_context(), "How do widgets and dashboards work?"));
    CHECK(result.answer.rfind("Dashboards are grids of widgets.", 0) == 0);
    CHECK(result.answer.find("Filters compose") != std::string::npos);
    CHECK(result.answer.find("fourth sentence") == std::string::npos);

    const auto other = generator.generate(render_prompt(
        PromptKind::kBasic, two_block_context(), "Where do connection credentials belong?"));
    CHECK(other.answer.rfind("The connection manager", 0) == 0);
}

TEST_CASE("the mock handles every template's question marker") {
    MockGenerator generator;
    const RetrievedContext ctx = two_block_context();
    const std::string question = "Which widgets bind to dataflow outputs?";
    for (const PromptKind kind : {PromptKind::kBasic, PromptKind::kRoleBased,
                                  PromptKind::kReasoning, PromptKind::kUnified}) {
        const auto result = generator.generate(render_prompt(kind, ctx, question));
        CHECK_MESSAGE(result.answer.find("Dashboards are grids") != std::string::npos,
                      "kind ", to_string(kind), " extracted: ", result.answer);
    }
    // The hyperlinked kind needs an expanded block to exist.
    RetrievedContext hyper = ctx;
    Chunk c;
    c.id = "u:c-0";
    c.text = "Linked chunk about widget bindings and dataflow outputs in dashboards.";
    hyper.expanded.push_back({c, LinkRef{}, "u:b-0", 0.5});
    hyper.final_ids.push_back("u:c-0");
    const auto result = generator.generate(render_prompt(PromptKind::kHyperlinked, hyper, question));
    CHECK(!result.answer.empty());
}

TEST_CASE("token accounting always balances") {
    MockGenerator generator;
    const auto result = generator.generate(
        render_prompt(PromptKind::kUnified, two_block_context(), "Anything?"));
    CHECK(result.total_tokens == result.prompt_tokens + result.completion_tokens);
    CHECK(result.prompt_tokens > 0);
    CHECK(result.completion_tokens > 0);
    CHECK(result.tokens_estimated);
}

TEST_CASE("an empty prompt violates the precondition") {
    MockGenerator generator;
    CHECK_THROWS_AS(generator.generate(""), std::invalid_argument);
}
