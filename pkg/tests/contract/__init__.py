# Contract tests