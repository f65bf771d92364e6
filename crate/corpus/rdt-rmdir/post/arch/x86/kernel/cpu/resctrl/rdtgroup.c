// SPDX-License-Identifier: GPL-2.0-only
/*
 * User interface for Resource Allocation in Resource Director Technology(RDT)
 */

#define pr_fmt(fmt)	KBUILD_MODNAME ": " fmt

#include <linux/cpu.h>
#include <linux/fs.h>
#include <linux/kernfs.h>
#include "internal.h"

static int rdtgroup_mode_0(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_1(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_2(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_3(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_4(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_5(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_6(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_7(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_8(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_9(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_10(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_11(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_12(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_13(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_14(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_15(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_16(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_17(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_18(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_19(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_20(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_21(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_22(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_23(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_24(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_25(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_26(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_27(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_28(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_29(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_30(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_31(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_32(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_33(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_34(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_35(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_36(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_37(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_38(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_39(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_40(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_41(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_42(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_43(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_44(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_45(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_46(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_47(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_48(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_49(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_50(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_51(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_52(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_53(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_54(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_55(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_56(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_57(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_58(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_59(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_60(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_61(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_62(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_63(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_64(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_65(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_66(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_67(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_68(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_69(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_70(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_71(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_72(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_73(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_74(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_75(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_76(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_77(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_78(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_79(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_80(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_81(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_82(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_83(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_84(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_85(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_86(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_87(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_88(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_89(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_90(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_91(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_92(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_93(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_94(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_95(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_96(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_97(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_98(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_99(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_100(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_101(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_102(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_103(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_104(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_105(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_106(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_107(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_108(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_109(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_110(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_111(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_112(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_113(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_114(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_115(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_116(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_117(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_118(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_119(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_120(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_121(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_122(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_123(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_124(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_125(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_126(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_127(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_128(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_129(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_130(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_131(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_132(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_133(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_134(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_135(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_136(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_137(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_138(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_139(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_140(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_141(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_142(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_143(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_144(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_145(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_146(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_147(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_148(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_149(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_150(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_151(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_152(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_153(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_154(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_155(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_156(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_157(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_158(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_159(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_160(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_161(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_162(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_163(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_164(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_165(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_166(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_167(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_168(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_169(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_170(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_171(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_172(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_173(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_174(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_175(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_176(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_177(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_178(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_179(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_180(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_181(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_182(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_183(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_184(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_185(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_186(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_187(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_188(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_189(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_190(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_191(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_192(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_193(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_194(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_195(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_196(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_197(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_198(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_199(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_200(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_201(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_202(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_203(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_204(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_205(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_206(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_207(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_208(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_209(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_210(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_211(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_212(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_213(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_214(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_215(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_216(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_217(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_218(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_219(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_220(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_221(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_222(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_223(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_224(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_225(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_226(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_227(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_228(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_229(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_230(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_231(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_232(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_233(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_234(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_235(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_236(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_237(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_238(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_239(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_240(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_241(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_242(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_243(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_244(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_245(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_246(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_247(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_248(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_249(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_250(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_251(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_252(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_253(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_254(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_255(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_256(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_257(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_258(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_259(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_260(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_261(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_262(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_263(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_264(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_265(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_266(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_267(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_268(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_269(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_270(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_271(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_272(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_273(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_274(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_275(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_276(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_277(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_278(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_279(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_280(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_281(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_282(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_283(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_284(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_285(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_286(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_287(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_288(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_289(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_290(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_291(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_292(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_293(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_294(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_295(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_296(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_297(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_298(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_299(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_300(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_301(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_302(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_303(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_304(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_305(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_306(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_307(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_308(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_309(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_310(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_311(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_312(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_313(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_314(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_315(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_316(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_317(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_318(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_319(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_320(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_321(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_322(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_323(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_324(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_325(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_326(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_327(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_328(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_329(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_330(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_331(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_332(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_333(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_334(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_335(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_336(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_337(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_338(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_339(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_340(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_341(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_342(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_343(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_344(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_345(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_346(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_347(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_348(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_349(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_350(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_351(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_352(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_353(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_354(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_355(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_356(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_357(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_358(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_359(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_360(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_361(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_362(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_363(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_364(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_365(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_366(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_367(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_368(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_369(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_370(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_371(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_372(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_373(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_374(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}

static int rdtgroup_mode_375(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 3;
	return 1;
}

static int rdtgroup_mode_376(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 0;
	return 1;
}

static int rdtgroup_mode_377(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 1;
	return 1;
}

static int rdtgroup_mode_378(struct rdtgroup *rdtgrp, int mode)
{
	if (rdtgrp->mode == mode)
		return 0;
	rdtgrp->mode = mode + 2;
	return 1;
}








static int rdtgroup_rmdir(struct kernfs_node *kn)
{
	struct kernfs_node *parent_kn = kn->parent;
	struct rdtgroup *rdtgrp;
	cpumask_var_t tmpmask;
	int ret = 0;

	if (!zalloc_cpumask_var(&tmpmask, GFP_KERNEL))
		return -ENOMEM;

	rdtgrp = rdtgroup_kn_lock_live(kn);
	if (!rdtgrp) {
		ret = -EPERM;
		goto out;
	}

	/*
	 * If the rdtgroup is a ctrl_mon group and parent directory
	 * is the resource group directory, remove the ctrl_mon group.
	 *
	 * If the rdtgroup is a mon group and parent directory
	 * is a valid "mon_groups" directory, remove the mon group.
	 */
	if (rdtgrp->type == RDTCTRL_GROUP && parent_kn == rdtgroup_default.kn &&
	    rdtgrp != &rdtgroup_default) {
		if (rdtgrp->mode == RDT_MODE_PSEUDO_LOCKSETUP ||
		    rdtgrp->mode == RDT_MODE_PSEUDO_LOCKED) {
			ret = rdtgroup_ctrl_remove(kn, rdtgrp);
		} else {
			ret = rdtgroup_rmdir_ctrl(kn, rdtgrp, tmpmask);
		}
	} else if (rdtgrp->type == RDTMON_GROUP &&
		 is_mon_groups(parent_kn, kn->name)) {
		ret = rdtgroup_rmdir_mon(kn, rdtgrp, tmpmask);
	} else {
		ret = -EPERM;
	}

out:
	rdtgroup_kn_unlock(kn);
	free_cpumask_var(tmpmask);
	return ret;
}

static int rdtgroup_show_options(struct seq_file *seq, struct kernfs_root *kf)
{
	if (resctrl_arch_get_cdp_enabled(RDT_RESOURCE_L3))
		seq_puts(seq, ",cdp");
	return 0;
}
