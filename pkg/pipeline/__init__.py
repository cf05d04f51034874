from .verification.verification_pipeline import VerificationPipeline
