#pragma once

#include <stdexcept>
#include <string>

namespace loom {

// Stable error codes, one per failure class. The CLI maps these to process
// exit codes, so the numbering is part of the external contract (see README).
enum class ErrorCode {
    ok = 0,
    usage = 2,
    config = 3,
    io = 4,
    empty_input = 10,
    no_chapters = 11,
    out_of_range = 12,
    dim_mismatch = 20,
    zero_vector = 21,
    too_few_paragraphs = 22,
    empty_text = 23,
    profile_mismatch = 24,
    missing_binding = 30,
    unknown_template = 31,
    template_gap = 32,
    context_overflow = 33,
    backend_error = 34,
    backend_exhausted = 35,
    parse_failure = 36,
    empty_expansion = 37,
    non_termination = 40,
    dangling_node = 41,
    schema_version_mismatch = 42,
    corrupt_checkpoint = 43,
    mismatched_artifacts = 44,
    no_roles = 50,
    too_few_sentences = 51,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    const char* code_name() const noexcept { return error_code_name(code_); }

private:
    ErrorCode code_;
};

#define LOOM_DEFINE_ERROR(Name, Code)                              \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& message)                  \
            : Error(ErrorCode::Code, message) {}                   \
    }

LOOM_DEFINE_ERROR(EmptyInputError, empty_input);
LOOM_DEFINE_ERROR(NoChaptersError, no_chapters);
LOOM_DEFINE_ERROR(OutOfRangeError, out_of_range);
LOOM_DEFINE_ERROR(DimMismatchError, dim_mismatch);
LOOM_DEFINE_ERROR(ZeroVectorError, zero_vector);
LOOM_DEFINE_ERROR(TooFewParagraphsError, too_few_paragraphs);
LOOM_DEFINE_ERROR(EmptyTextError, empty_text);
LOOM_DEFINE_ERROR(ProfileMismatchError, profile_mismatch);
LOOM_DEFINE_ERROR(MissingBindingError, missing_binding);
LOOM_DEFINE_ERROR(UnknownTemplateError, unknown_template);
LOOM_DEFINE_ERROR(TemplateGapError, template_gap);
LOOM_DEFINE_ERROR(ContextOverflowError, context_overflow);
LOOM_DEFINE_ERROR(BackendError, backend_error);
LOOM_DEFINE_ERROR(ParseFailureError, parse_failure);
LOOM_DEFINE_ERROR(EmptyExpansionError, empty_expansion);
LOOM_DEFINE_ERROR(NonTerminationError, non_termination);
LOOM_DEFINE_ERROR(DanglingNodeError, dangling_node);
LOOM_DEFINE_ERROR(SchemaVersionMismatchError, schema_version_mismatch);
LOOM_DEFINE_ERROR(MismatchedArtifactsError, mismatched_artifacts);
LOOM_DEFINE_ERROR(NoRolesError, no_roles);
LOOM_DEFINE_ERROR(TooFewSentencesError, too_few_sentences);
LOOM_DEFINE_ERROR(ConfigError, config);
LOOM_DEFINE_ERROR(IoError, io);

#undef LOOM_DEFINE_ERROR

// Carries the checkpoint path so callers can print resume instructions.
class BackendExhaustedError : public Error {
public:
    explicit BackendExhaustedError(const std::string& message,
                                   std::string checkpoint_path = {})
        : Error(ErrorCode::backend_exhausted, message),
          checkpoint_path_(std::move(checkpoint_path)) {}

    const std::string& checkpoint_path() const noexcept { return checkpoint_path_; }

private:
    std::string checkpoint_path_;
};

class CorruptCheckpointError : public Error {
public:
    explicit CorruptCheckpointError(const std::string& message)
        : Error(ErrorCode::corrupt_checkpoint, message) {}
};

}  // namespace loom
