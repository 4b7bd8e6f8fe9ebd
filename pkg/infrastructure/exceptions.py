#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
自定义异常模块

所有异常均派生自 ReplayToolError，CLI 根据异常类别映射退出码：
ConfigurationError -> 2，CriticalError -> 3，其余 -> 1。
"""

from typing import Optional


class ReplayToolError(Exception):
    """基础异常类"""
    def __init__(self, message: str, details: Optional[str] = None):
        self.message = message
        self.details = details
        super().__init__(self.message)

    def __str__(self):
        if self.details:
            return f"{self.message} - {self.details}"
        return self.message


class CriticalError(ReplayToolError):
    """关键错误 - 需要立即终止整个回放"""
    pass


class ResourceGuardError(CriticalError):
    """中间多项式项数超过上限"""
    def __init__(self, message: str, details: Optional[str] = None, step: str = ""):
        super().__init__(message, details)
        self.step = step


class BudgetExceeded(ResourceGuardError):
    """流水线超出墙钟时间预算"""
    pass


# ============ 配置与输入 ============

class ConfigurationError(ReplayToolError):
    """配置错误"""
    pass


class ProfileError(ConfigurationError):
    """场景配置不合法（例如重数小于 1）"""
    pass


class UnknownProfile(ProfileError):
    """未知的场景类别"""
    pass


class ParseError(ConfigurationError):
    """多项式文本解析失败"""
    def __init__(self, message: str, details: Optional[str] = None, position: int = -1):
        super().__init__(message, details)
        self.position = position


class FixtureFileError(ConfigurationError):
    """基准文件无法读取或格式错误"""
    pass


# ============ 代数运算 ============

class AlgebraError(ReplayToolError):
    """代数运算错误"""
    pass


class NotDivisible(AlgebraError):
    """精确除法余数非零"""
    pass


class MissingAssignment(AlgebraError):
    """求值时缺少变量赋值"""
    pass


class BothConstant(AlgebraError):
    """结式的两个输入关于消元变量都是常数"""
    pass


class NotLinear(AlgebraError):
    """方程关于指定未知量不是（齐次）线性的"""
    pass


class NotLinearInTarget(NotLinear):
    """迹约束关于目标变量不是一次的"""
    pass


class MissingRule(AlgebraError):
    """导子缺少某个符号的规则"""
    def __init__(self, message: str, details: Optional[str] = None, symbol: str = ""):
        super().__init__(message, details)
        self.symbol = symbol


class NotSymmetric(AlgebraError):
    """多项式关于两个变量不对称"""
    pass


class NotPolynomial(AlgebraError):
    """结果带有非平凡分母"""
    pass


# ============ 回放 ============

class UnknownFixture(ReplayToolError):
    """基准编号不存在"""
    pass


class StepFailure(ReplayToolError):
    """流水线步骤失败（例如基准不匹配）"""
    def __init__(self, message: str, details: Optional[str] = None,
                 step_index: int = -1, step_name: str = "", diagnostic: str = ""):
        super().__init__(message, details)
        self.step_index = step_index
        self.step_name = step_name
        self.diagnostic = diagnostic


class IdenticallyZero(ReplayToolError):
    """最终多项式恒为零"""
    pass


class LeadingCoefficientVanished(ReplayToolError):
    """特化点处首项系数消失，需要重新采样"""
    pass


class ExhaustedTrials(ReplayToolError):
    """采样次数用尽仍未找到非零见证"""
    pass


class ReportFileError(ReplayToolError):
    """报告文件缺失或无法解析"""
    pass
