#pragma once

#include "assertlint/ast.hpp"
#include "assertlint/antipatterns.hpp"
#include "assertlint/categorizer.hpp"
#include "assertlint/config.hpp"
#include "assertlint/diagnostic.hpp"
#include "assertlint/junit.hpp"
#include "assertlint/lexer.hpp"
#include "assertlint/parser.hpp"
#include "assertlint/pipeline.hpp"
#include "assertlint/pos_tagger.hpp"
#include "assertlint/readability.hpp"
#include "assertlint/report.hpp"
#include "assertlint/source.hpp"
#include "assertlint/splitter.hpp"
#include "assertlint/stats.hpp"
