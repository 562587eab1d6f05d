"""Relativistic qubits: Weyl spinors, Lorentz actions, bispinors and Fock algebras."""

from .basic_types import (
    DEFAULT_OPTIONS,
    BaseAction,
    BaseEvent,
    Bispinor,
    BlochReport,
    CompleteReducerResult,
    CreateStoreOptions,
    DocumentError,
    DomainError,
    ExtendedComplex,
    FinishAction,
    FinishEvent,
    FockReport,
    FourVector,
    HermitianMatrix2,
    InitAction,
    InitializationActionError,
    LorentzMatrix,
    ModeSet,
    NoGoReport,
    PipelineStepError,
    Q2BitAmplitudes,
    ReducerResult,
    ReducerType,
    RelationCheck,
    RelqubitError,
    RelqubitOptions,
    ReportOutputError,
    SpinMatrix,
    TracelessCommutatorReport,
    ValidationError,
    WeylSpinor,
    ZeroStateError,
    is_complete_reducer_result,
)
from .main import Store
from .pipeline import (
    BoostAction,
    InvariantRow,
    LoadStateAction,
    MatrixAction,
    ParityAction,
    RotateAction,
    StepAppliedEvent,
    TransformState,
    run_pipeline,
)

__all__ = (
    'DEFAULT_OPTIONS',
    'BaseAction',
    'BaseEvent',
    'Bispinor',
    'BlochReport',
    'BoostAction',
    'CompleteReducerResult',
    'CreateStoreOptions',
    'DocumentError',
    'DomainError',
    'ExtendedComplex',
    'FinishAction',
    'FinishEvent',
    'FockReport',
    'FourVector',
    'HermitianMatrix2',
    'InitAction',
    'InitializationActionError',
    'InvariantRow',
    'LoadStateAction',
    'LorentzMatrix',
    'MatrixAction',
    'ModeSet',
    'NoGoReport',
    'ParityAction',
    'PipelineStepError',
    'Q2BitAmplitudes',
    'ReducerResult',
    'ReducerType',
    'RelationCheck',
    'RelqubitError',
    'RelqubitOptions',
    'ReportOutputError',
    'RotateAction',
    'SpinMatrix',
    'StepAppliedEvent',
    'Store',
    'TracelessCommutatorReport',
    'TransformState',
    'ValidationError',
    'WeylSpinor',
    'ZeroStateError',
    'is_complete_reducer_result',
    'run_pipeline',
)
