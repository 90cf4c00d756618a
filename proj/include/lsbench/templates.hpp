#pragma once

#include <map>
#include <string>

#include "lsbench/types.hpp"

namespace lsb {

// Prompt text assembly. Templates use {{name}} placeholders so literal
// braces (shell brace lists like path0/{a.txt,b.txt}) pass through intact.

// Throws std::invalid_argument if a {{placeholder}} remains unresolved.
std::string substitute(const std::string& tmpl,
                       const std::map<std::string, std::string>& values);

// Task-instruction paragraph for a demo and reveal timing ({{size}} left
// unresolved for board demos; File has a single timing-independent variant).
const std::string& task_instruction_template(DemoKind demo, Reveal reveal);

// Question sentence template for (demo, skill). File CompareState has three
// variants (0..2); every other pair has exactly one.
const std::string& question_template(DemoKind demo, Skill skill, int variant = 0);
int question_template_variant_count(DemoKind demo, Skill skill);

// The fixed final line of every prompt.
const std::string& answer_prompt();

// Chat template for the optional external judge.
extern const std::string kJudgePromptTemplate;

} // namespace lsb
